import numpy as np
import pytest
from hypothesis import settings, strategies as st

from c3rel.algebra import Multivector

settings.register_profile("c3rel", deadline=None)
settings.load_profile("c3rel")

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
multivectors = st.lists(finite, min_size=8, max_size=8).map(Multivector.from_reals)
complex_vectors = st.lists(finite, min_size=6, max_size=6).map(
    lambda x: Multivector(0, (complex(x[0], x[1]), complex(x[2], x[3]), complex(x[4], x[5]))))
real_vectors = st.lists(finite, min_size=3, max_size=3).map(np.array)


def assert_mv_close(a, b, atol=1e-12):
    if not isinstance(b, Multivector):
        b = Multivector(b)
    scale = max(1.0, a.max_abs(), b.max_abs())
    np.testing.assert_allclose(a.to_reals(), b.to_reals(), rtol=0, atol=atol * scale)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
