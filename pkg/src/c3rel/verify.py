"""Randomized invariant suites: matrix-oracle equivalence, product identities,
conjugation axioms, interval invariance and the Lorentz closed form, plus the
deterministic finite-difference and kinematics checks.

Each suite returns a :class:`CheckResult`; `run_all` is what ``c3rel verify``
prints.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import algebra as alg
from . import matrix_oracle as mo
from .algebra import E1, E3, Multivector, circ, otimes
from .fields import (
    VACUUM, analytic_field, classical_split, maxwell_residual, potential_residual,
    st_nabla_fd,
)
from .kinematics import relative_mass, st_momentum, time_dilation, work_to_light
from .spacetime import (
    Event, Frame, boost_frame, compose_collinear_boosts, galilean_coords, interval, lorentz_coords,
    rapidity_from_speed,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float
    tolerance: float
    cases: int
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] {self.name}: max error {self.max_error:.3e} "
                f"(tol {self.tolerance:.1e}, {self.cases} cases)")

    def to_dict(self) -> dict:
        return asdict(self)


def random_multivector(rng: np.random.Generator, scale: float = 1.0) -> Multivector:
    return Multivector.from_reals(rng.normal(scale=scale, size=8))


def random_complex_vector(rng: np.random.Generator) -> Multivector:
    x = rng.normal(size=6)
    return Multivector(0, x[:3] + 1j * x[3:])


def random_real_vector(rng: np.random.Generator) -> np.ndarray:
    return rng.normal(size=3)


def random_event(rng: np.random.Generator, c: float = 1.0, span: float = 1.0) -> Event:
    return Event(rng.uniform(-span, span) / c, tuple(rng.uniform(-span, span, 3)), c)


def rel_error(a: Multivector, b: Multivector) -> float:
    """Max componentwise difference, relative to the larger operand (floor 1)."""
    diff = max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs))
    return diff / max(1.0, a.max_abs(), b.max_abs())


def _result(name, errors, tol, n, t0) -> CheckResult:
    worst = float(max(errors)) if len(errors) else 0.0
    return CheckResult(name, worst <= tol, worst, tol, n, time.perf_counter() - t0)


def check_oracle(n: int, seed: int = 0, tol: float = 1e-10) -> CheckResult:
    """gp, bar, cinv, mexp against matrix product, adjoint, adjugate, expm."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    errs = []
    for _ in range(n):
        M, N = random_multivector(rng), random_multivector(rng)
        errs.append(max(
            rel_error(M * N, mo.gp(M, N)),
            rel_error(alg.bar(M), mo.bar(M)),
            rel_error(alg.cinv(M), mo.cinv(M)),
            rel_error(alg.mexp(M), mo.mexp(M)),
        ))
    return _result("matrix oracle (gp, bar, cinv, mexp)", errs, tol, n, t0)


def check_product_identities(n: int, seed: int = 1, tol: float = 1e-12) -> CheckResult:
    """A o B = (AB + BA)/2, A (x) B = (AB - BA)/2; a o b = a.b, a (x) b = i a x b."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    errs = []
    for _ in range(n):
        A, B = random_complex_vector(rng), random_complex_vector(rng)
        AB, BA = A * B, B * A
        sym = Multivector(circ(A.v, B.v))
        anti = Multivector(0, otimes(A.v, B.v))
        a, b = random_real_vector(rng), random_real_vector(rng)
        dot_err = abs(circ(a, b) - float(a @ b)) / max(1.0, abs(float(a @ b)))
        cross = Multivector(0, 1j * np.cross(a, b))
        errs.append(max(
            rel_error(sym, (AB + BA) * 0.5),
            rel_error(anti, (AB - BA) * 0.5),
            dot_err,
            rel_error(Multivector(0, otimes(a, b)), cross),
        ))
    return _result("product identities", errs, tol, n, t0)


def check_conjugation_axioms(n: int, seed: int = 2, tol: float = 1e-12) -> CheckResult:
    """bar: conjugates complex scalars, additive, reverses products, involutive.
    cinv: the last three of those."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    errs = []
    for _ in range(n):
        x, y = rng.normal(size=2)
        A, B = random_multivector(rng), random_multivector(rng)
        item1 = rel_error(alg.bar(Multivector(complex(x, y))), Multivector(complex(x, -y)))
        errs.append(max(
            item1,
            rel_error(alg.bar(A + B), alg.bar(A) + alg.bar(B)),
            rel_error(alg.bar(A * B), alg.bar(B) * alg.bar(A)),
            rel_error(alg.bar(alg.bar(A)), A),
            rel_error(alg.cinv(A + B), alg.cinv(A) + alg.cinv(B)),
            rel_error(alg.cinv(A * B), alg.cinv(B) * alg.cinv(A)),
            rel_error(alg.cinv(alg.cinv(A)), A),
        ))
    return _result("conjugation axioms (bar 1-4, cinv 2-4)", errs, tol, n, t0)


def _random_speed(rng, c):
    return rng.uniform(-0.95, 0.95) * c


def check_interval_invariance(n: int, seed: int = 3, tol: float = 1e-12) -> CheckResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    errs = []
    for _ in range(n):
        X = random_event(rng)
        v = _random_speed(rng, X.c)
        errs.append(abs(interval(lorentz_coords(X, v)) - interval(X)))
    return _result("interval invariance", errs, tol, n, t0)


def lorentz_closed_form(X: Event, v: float) -> Event:
    """Textbook boost along x (independent of the algebra)."""
    c = X.c
    g = 1.0 / math.sqrt(1.0 - (v / c) ** 2)
    x, y, z = X.x
    return Event(g * (X.t + v * x / c**2), (g * (x + v * X.t), y, z), c)


def event_error(a: Event, b: Event) -> float:
    da = np.array([a.ct, *a.x])
    db = np.array([b.ct, *b.x])
    return float(np.max(np.abs(da - db)) / max(1.0, np.max(np.abs(db))))


def check_lorentz_closed_form(n: int, seed: int = 4, tol: float = 1e-12) -> CheckResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    errs = [event_error(lorentz_coords(X, v), lorentz_closed_form(X, v))
            for X, v in ((random_event(rng), _random_speed(rng, 1.0)) for _ in range(n))]
    errs.append(event_error(lorentz_coords(Event(1.0), 0.6), Event(1.25, (0.75, 0, 0))))
    return _result("Lorentz versor vs closed form", errs, tol, n + 1, t0)


def galilean_error(X: Event, v: float) -> float:
    a, b = lorentz_coords(X, v), galilean_coords(X, v)
    return float(np.max(np.abs(np.array([a.t, *a.x]) - np.array([b.t, *b.x]))))


def galilean_ratio(X: Event = Event(1.0), beta: float = 1e-3) -> float:
    """error(2 beta) / error(beta); 4 for a quadratic discrepancy.

    Only events with no position component along the boost are quadratic:
    otherwise t' carries the first-order term v x / c^2.
    """
    return galilean_error(X, 2 * beta * X.c) / galilean_error(X, beta * X.c)


def check_galilean_limit(lo: float = 3.6, hi: float = 4.4) -> CheckResult:
    t0 = time.perf_counter()
    r = galilean_ratio()
    return CheckResult("Galilean limit ratio in [3.6, 4.4]", lo <= r <= hi, abs(r - 4.0),
                       0.4, 1, time.perf_counter() - t0)


# Along a coordinate axis the time and space differences of f(x - ct) cancel
# exactly (the time step is h/c), leaving nothing to converge; tilt the wave.
OBLIQUE = (0.6, 0.48, 0.64)
OBLIQUE_POL = (0.8, -0.36, -0.48)


def convergence_order(residual, h: float) -> float:
    return math.log2(residual(h) / residual(h / 2))


def check_maxwell(h: float = 1e-2) -> list[CheckResult]:
    t0 = time.perf_counter()
    at = Event(0.3, (0.2, -0.1, 0.4))
    F, src, _ = analytic_field("plane_wave", k=2.0, E0=1.0, prop=OBLIQUE, pol=OBLIQUE_POL)
    order = convergence_order(lambda s: maxwell_residual(F, src, at, s).norm(), h)
    out = [CheckResult("plane-wave FD order in [1.7, 2.3]", 1.7 <= order <= 2.3,
                       abs(order - 2.0), 0.3, 1, time.perf_counter() - t0)]

    t0 = time.perf_counter()
    Fc, srcc, _ = analytic_field("constant", E0=(1.0, 2.0, -0.5))
    r = maxwell_residual(Fc, srcc, at, h).norm()
    out.append(CheckResult("constant field residual exactly 0", r == 0.0, r, 0.0, 1,
                           time.perf_counter() - t0))

    t0 = time.perf_counter()
    unphysical = lambda X: Multivector(0, (X.x[0] ** 2, X.t * X.x[2], 0.0)) + 1j * E3 * X.x[1]
    errs = []
    for f, s in ((F, src), (unphysical, VACUUM)):
        full = maxwell_residual(f, s, at, h)
        errs.append(rel_error(classical_split(f, s, at, h).reassemble(), full))
    out.append(_result("classical split reassembly", errs, 1e-12, 2, t0))

    t0 = time.perf_counter()
    four = st_nabla_fd(lambda X: X.as_multivector(), at, h)
    err = rel_error(four, Multivector(4.0))
    out.append(CheckResult("nabla X = 4", err <= 10 * h * h, err, 10 * h * h, 1,
                           time.perf_counter() - t0))
    return out


def check_potential(h: float = 1e-2) -> list[CheckResult]:
    from .fields import st_nabla_fd as nabla

    t0 = time.perf_counter()
    at = Event(0.3, (0.2, -0.1, 0.4))
    _, src, P = analytic_field("plane_wave", k=2.0, E0=1.0, prop=OBLIQUE, pol=OBLIQUE_POL)
    res = potential_residual(P, src, at, h)
    bound = 10 * h * h
    err = max(res.wave.norm(), abs(res.lorentz))
    out = [CheckResult("plane-wave potential residuals <= 10 h^2", err <= bound, err, bound, 1,
                       time.perf_counter() - t0)]

    t0 = time.perf_counter()
    v = 0.6
    phi = rapidity_from_speed(v)

    def g_primed(Xp: Event) -> float:
        t, (x, y, z) = Xp.t, Xp.x
        return math.sin(0.7 * t + 0.3 * x) * math.cos(0.5 * y - 0.2 * z) + 0.1 * x * t

    g = lambda X: g_primed(lorentz_coords(X, v))
    lhs = alg.mexp(E1 * -phi) * nabla(g, at, h)
    primed = boost_frame(Frame.canonical(), (1.0, 0.0, 0.0), phi)
    rhs = nabla(g_primed, lorentz_coords(at, v), h, frame=primed)
    err = (lhs - rhs).norm()
    out.append(CheckResult("chain rule D' = exp(-phi e1) D", err <= bound + 1e-10, err,
                           bound + 1e-10, 1, time.perf_counter() - t0))
    return out


def check_kinematics() -> list[CheckResult]:
    t0 = time.perf_counter()
    errs = [
        abs(work_to_light(1.0, 1.0) - 1.0),
        abs(time_dilation(math.atanh(0.6)) - 1.25),
        abs(relative_mass(2.0, 0.6, 1.0) - 2.5),
        abs(compose_collinear_boosts(math.atanh(0.6), math.atanh(0.6)).speed() - 15 / 17),
    ]
    rng = np.random.default_rng(5)
    for _ in range(100):
        m0, v = rng.uniform(0.1, 3.0), rng.uniform(-0.99, 0.99)
        P = st_momentum(m0, v)
        errs.append(rel_error(P * P.cinv(), Multivector(m0 * m0)))
    return [_result("kinematics (work, gamma, mass, mass shell, composition)", errs,
                    1e-10, len(errs), t0)]


def run_all(n: int = 1000, seed: int = 0) -> list[CheckResult]:
    return [
        check_oracle(n, seed),
        check_product_identities(n, seed + 1),
        check_conjugation_axioms(n, seed + 2),
        check_interval_invariance(n, seed + 3),
        check_lorentz_closed_form(n, seed + 4),
        check_galilean_limit(),
        *check_maxwell(),
        *check_potential(),
        *check_kinematics(),
    ]
