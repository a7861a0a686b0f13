import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from c3rel.algebra import E1, Multivector, mexp
from c3rel.errors import NonUnitDirection, SpeedNotSubluminal, SuperluminalSample
from c3rel.kinematics import (
    Particle, Worldline, kinematics_report, relative_mass, st_momentum, st_velocity,
    time_dilation, work_to_light,
)
from c3rel.spacetime import rapidity_from_speed

from conftest import assert_mv_close

speeds = st.floats(min_value=-0.99, max_value=0.99)


def test_st_velocity_examples():
    assert_mv_close(st_velocity(Worldline(lambda t: (1.0, 2.0, 3.0)), 0.5), Multivector(1.0))
    v = 0.4
    assert_mv_close(st_velocity(Worldline(lambda t: (v * t, 0, 0)), 2.0), 1 + E1 * v, 1e-9)
    a0, t = 0.1, 3.0
    w = Worldline(lambda t: (0.5 * a0 * t * t, 0, 0), c=2.0)
    assert_mv_close(st_velocity(w, t), 2.0 + E1 * (a0 * t), 1e-9)


def test_st_velocity_superluminal():
    with pytest.raises(SuperluminalSample):
        st_velocity(Worldline(lambda t: (2 * t, 0, 0)), 0.0)
    with pytest.raises(ValueError):
        st_velocity(Worldline(lambda t: (0, 0, 0)), 0.0, dt=0.0)


def test_rest_system_velocity_is_c():
    # X' = X exp(-phi e1) along X = ct + vt e1; V' = dX'/dt' = c
    c, v = 1.0, 0.6
    phi = rapidity_from_speed(v, c)
    rot = mexp(E1 * -phi)
    Xp = lambda t: Multivector(c * t, (v * t, 0, 0)) * rot
    t, dt = 2.0, 1e-5
    dX = (Xp(t + dt) - Xp(t - dt)) * (1 / (2 * dt))
    dtp_dt = dX.s.real / c
    assert_mv_close(dX * (1 / dtp_dt), Multivector(c), atol=1e-9)
    assert 1 / dtp_dt == pytest.approx(time_dilation(phi), rel=1e-9)


def test_time_dilation():
    assert time_dilation(0.0) == 1.0
    assert time_dilation(math.atanh(0.6)) == pytest.approx(1.25, abs=1e-15)


@given(st.floats(-20, 20))
def test_time_dilation_at_least_one(phi):
    assert time_dilation(phi) >= 1.0


@given(speeds)
def test_dilation_equals_gamma(v):
    assert time_dilation(rapidity_from_speed(v)) == pytest.approx(relative_mass(1.0, v), abs=1e-12 * 100)


def test_relative_mass_examples():
    assert relative_mass(2.0, 0.6, 1.0) == pytest.approx(2.5, abs=1e-15)
    assert relative_mass(3.0, 0.0, 5.0) == 3.0
    assert relative_mass(0.0, 0.9, 1.0) == 0.0
    with pytest.raises(SpeedNotSubluminal):
        relative_mass(1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        Particle(-1.0)


def test_st_momentum_examples():
    assert st_momentum(1.0, 0.0, (1, 0, 0), 1.0) == Multivector(1.0)
    assert_mv_close(st_momentum(1.0, 0.6, (1, 0, 0), 1.0), 1.25 + E1 * 0.75)
    with pytest.raises(NonUnitDirection):
        st_momentum(1.0, 0.5, (1, 1, 0))
    with pytest.raises(SpeedNotSubluminal):
        st_momentum(1.0, 1.2)


@given(st.floats(0.01, 10), speeds, st.floats(0.5, 3))
def test_mass_shell(m0, v, c):
    P = st_momentum(m0, v * c, (0, 0.6, 0.8), c)
    shell = P * P.cinv()
    assert shell.is_scalar(atol=1e-12)
    assert shell.s.real == pytest.approx(m0**2 * c**4, rel=1e-10 / (1 - v * v))


def _work_oracle(m0, c, eps=1e-6):
    """Adaptive quadrature of the raw integrand to c(1 - eps) plus the exact tail."""
    raw, _ = quad(lambda v: m0 * v / math.sqrt(1 - (v / c) ** 2), 0, c * (1 - eps),
                  limit=200)
    return raw + m0 * c * c * math.sqrt(2 * eps - eps * eps)


@pytest.mark.parametrize("m0, c, expected", [(1, 1, 1.0), (2, 1, 2.0), (1, 3, 9.0)])
def test_work_to_light(m0, c, expected):
    assert work_to_light(m0, c) == pytest.approx(expected, abs=1e-9 * expected)
    assert work_to_light(m0, c) == pytest.approx(_work_oracle(m0, c), abs=1e-6 * expected)


def test_kinematics_report():
    r = kinematics_report(2.0, 0.6)
    assert r["gamma"] == pytest.approx(1.25)
    assert r["m"] == pytest.approx(2.5)
    assert r["energy"] == pytest.approx(2.5)
    np.testing.assert_allclose(r["momentum"], [1.5, 0, 0])
