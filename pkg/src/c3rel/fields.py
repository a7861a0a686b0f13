"""Electromagnetic fields F = E + iB, the spacetime nabla, and Maxwell residuals.

Gaussian units throughout.  Fields, sources and potentials are samplers,
i.e. pure functions of an :class:`~c3rel.spacetime.Event`; derivatives are
taken with central differences on a stencil of step h in every coordinate
(ct, x, y, z), so the time step is h/c seconds.

With the spacetime nabla D = (1/c) d/dt + grad, Maxwell's equations are the
single statement D F = 4 pi (rho - J/c); its scalar, vector, bivector and
pseudoscalar parts are Gauss, Ampere-Maxwell, Faraday and no-monopole.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from numbers import Number
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .algebra import ATOL, E1, E2, E3, Multivector, bar, mexp
from .errors import EvaluationFailure, NotAField, UnknownKind
from .spacetime import Event, Frame, boost_frame, unit_vector

FieldSampler = Callable[[Event], Multivector]
_BASIS = (E1, E2, E3)
_AXES = np.eye(3)


@dataclass(frozen=True)
class EMField:
    sampler: FieldSampler

    def __call__(self, X: Event) -> Multivector:
        return self.sampler(X)


def _zero_rho(X: Event) -> float:
    return 0.0


def _zero_J(X: Event) -> np.ndarray:
    return np.zeros(3)


@dataclass(frozen=True)
class FourCurrent:
    rho: Callable[[Event], float] = _zero_rho
    J: Callable[[Event], Sequence[float]] = _zero_J

    def source_term(self, X: Event) -> Multivector:
        """rho - J/c at X."""
        return Multivector(float(self.rho(X)), -np.asarray(self.J(X), dtype=float) / X.c)


VACUUM = FourCurrent()


@dataclass(frozen=True)
class Potential:
    Phi: Callable[[Event], float]
    A: Callable[[Event], Sequence[float]]

    def __call__(self, X: Event) -> Multivector:
        """Phi - A at X."""
        return Multivector(float(self.Phi(X)), -np.asarray(self.A(X), dtype=float))


@dataclass(frozen=True)
class SpacetimeGrid:
    """Step size and the events at which residuals are evaluated."""

    h: float
    points: tuple[Event, ...]

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError(f"step must be positive, got {self.h!r}")
        if len(set(self.points)) != len(self.points):
            raise ValueError("grid points must be pairwise distinct")


# -- field splitting ---------------------------------------------------------


def split_field(F: Multivector) -> tuple[np.ndarray, np.ndarray]:
    """E = (F + bar F)/2 and B = (F - bar F)/(2i) in the canonical frame."""
    if not F.is_complex_vector():
        raise NotAField(f"{F} has a scalar or pseudoscalar part")
    Fb = bar(F)
    E = (F + Fb) * 0.5
    B = (F - Fb) * (-0.5j)
    return np.array([z.real for z in E.v]), np.array([z.real for z in B.v])


def boosted_conjugation(M: Multivector, phi: float, direction: Sequence[float]) -> Multivector:
    """Proper conjugation of the frame boosted by `phi` along `direction`.

    Mapping back to the rest frame, conjugating, and mapping forward collapses
    to exp(-phi d) bar(M) exp(phi d) because boost versors are self-conjugate.
    """
    d = Multivector.vector(unit_vector(direction))
    return mexp(d * -phi) * bar(M) * mexp(d * phi)


def frame_split(F: Multivector, phi: float,
                direction: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Electric and magnetic parts as seen by the boosted observer.

    Returned as coordinates on the boosted frame vectors e_k' (obtained by
    boosting e_k), so that F = sum_k (E'_k + i B'_k) e_k'.
    """
    if not F.is_complex_vector():
        raise NotAField(f"{F} has a scalar or pseudoscalar part")
    Fb = boosted_conjugation(F, phi, direction)
    E = (F + Fb) * 0.5
    B = (F - Fb) * (-0.5j)
    frame = boost_frame(Frame.canonical(), direction, phi)
    # e_k' are orthonormal under the scalar part of the geometric product
    Ek = np.array([(E * f).s.real for f in frame])
    Bk = np.array([(B * f).s.real for f in frame])
    return Ek, Bk


# -- finite differences -----------------------------------------------------


def _as_mv(value) -> Multivector:
    if isinstance(value, Multivector):
        return value
    if isinstance(value, Number):
        return Multivector(value)
    raise TypeError(f"field sampler returned {type(value).__name__}")


def _sample(field: Callable, X: Event) -> Multivector:
    try:
        value = _as_mv(field(X))
    except EvaluationFailure:
        raise
    except Exception as exc:
        raise EvaluationFailure(f"field evaluation failed at {X}: {exc}") from exc
    if not np.all(np.isfinite(value.to_reals())):
        raise EvaluationFailure(f"field is not finite at {X}")
    return value


def _stencil(X: Event, h: float, axis: int, sign: int) -> Event:
    """Neighbour of X at +-h along coordinate `axis` (0 = ct, 1..3 = x, y, z)."""
    if axis == 0:
        return X.shifted(dt=sign * h / X.c)
    return X.shifted(dx=sign * h * _AXES[axis - 1])


def partials(field: Callable, at: Event, h: float) -> list[Multivector]:
    """Central-difference derivatives [(1/c) d/dt, d/dx, d/dy, d/dz] of `field` at `at`."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}")
    out = []
    for axis in range(4):
        fp = _sample(field, _stencil(at, h, axis, +1))
        fm = _sample(field, _stencil(at, h, axis, -1))
        out.append((fp - fm) * (1.0 / (2 * h)))
    return out


def second_partials(field: Callable, at: Event, h: float) -> list[Multivector]:
    """Central second differences [(1/c^2) d2/dt2, d2/dx2, d2/dy2, d2/dz2]."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}")
    f0 = _sample(field, at)
    out = []
    for axis in range(4):
        fp = _sample(field, _stencil(at, h, axis, +1))
        fm = _sample(field, _stencil(at, h, axis, -1))
        out.append((fp - f0 * 2 + fm) * (1.0 / (h * h)))
    return out


def st_nabla_fd(field: Callable, at: Event, h: float, frame: Frame | None = None) -> Multivector:
    """(1/c) df/dt + sum_k e_k df/dx_k, with basis vectors multiplied on the left.

    `frame` supplies the e_k of the inertial system whose coordinates `at` and
    `field` are expressed in; the canonical frame by default.  A boosted
    system's nabla needs its own (boosted) frame vectors.
    """
    dt, dx, dy, dz = partials(field, at, h)
    f1, f2, f3 = frame if frame is not None else _BASIS
    return dt + f1 * dx + f2 * dy + f3 * dz


def st_nabla_conj_fd(field: Callable, at: Event, h: float) -> Multivector:
    """The inverted operator (1/c) d/dt - grad."""
    dt, dx, dy, dz = partials(field, at, h)
    return dt - (E1 * dx + E2 * dy + E3 * dz)


# -- Maxwell residuals ------------------------------------------------------


def maxwell_residual(F: Callable, src: FourCurrent, at: Event, h: float) -> Multivector:
    """D F - 4 pi (rho - J/c); zero up to discretization error iff Maxwell holds."""
    return st_nabla_fd(F, at, h) - src.source_term(at) * (4 * math.pi)


class ClassicalResiduals(NamedTuple):
    gauss: float
    ampere: np.ndarray
    faraday: np.ndarray
    nomonopole: float

    def reassemble(self) -> Multivector:
        """gauss + ampere + i faraday + i nomonopole."""
        return Multivector.from_grades(self.gauss, self.ampere, self.faraday, self.nomonopole)

    def to_dict(self) -> dict:
        return {"gauss": self.gauss, "ampere": list(map(float, self.ampere)),
                "faraday": list(map(float, self.faraday)), "nomonopole": self.nomonopole}


def classical_split(F: Callable, src: FourCurrent, at: Event, h: float) -> ClassicalResiduals:
    """The four vector-calculus Maxwell residuals, from E and B derivatives."""
    d = partials(F, at, h)
    dE, dB = zip(*(split_field(p) for p in d))
    # jac[i][j] = d E_j / d x_i
    jE, jB = np.array(dE[1:]), np.array(dB[1:])

    def div(j):
        return float(np.trace(j))

    def curl(j):
        return np.array([j[1, 2] - j[2, 1], j[2, 0] - j[0, 2], j[0, 1] - j[1, 0]])

    c = at.c
    rho = float(src.rho(at))
    J = np.asarray(src.J(at), dtype=float)
    return ClassicalResiduals(
        gauss=div(jE) - 4 * math.pi * rho,
        ampere=dE[0] - curl(jB) + 4 * math.pi * J / c,
        faraday=dB[0] + curl(jE),
        nomonopole=div(jB),
    )


class SourceTransform(NamedTuple):
    value: Multivector        # exp(-phi d) (rho - J/c)
    rho: float                # rho'
    J: np.ndarray             # J'
    has_bivector: bool        # True when J had a part transverse to d


def transform_sources(rho: float, J: Sequence[float], phi: float,
                      direction: Sequence[float], c: float = 1.0) -> SourceTransform:
    """Sources seen in the boosted system: rho' - J'/c = exp(-phi d)(rho - J/c).

    When J is not collinear with `direction` the product picks up a bivector
    part, which is reported through `has_bivector`; rho' and J' then hold the
    scalar and vector parts only.
    """
    d = Multivector.vector(unit_vector(direction))
    M = mexp(d * -phi) * Multivector(float(rho), -np.asarray(J, dtype=float) / c)
    g0, g1, g2, g3 = M.grades()
    scale = max(1.0, M.max_abs())
    flagged = bool(np.max(np.abs(g2)) > ATOL * scale or abs(g3) > ATOL * scale)
    return SourceTransform(M, g0, -c * g1, flagged)


class PotentialResidual(NamedTuple):
    wave: Multivector
    lorentz: float


def potential_residual(P: Potential, src: FourCurrent, at: Event, h: float) -> PotentialResidual:
    """Wave-equation residual of Phi - A and the Lorentz-gauge residual.

    wave    = [(1/c^2) d2/dt2 - lap](Phi - A) - 4 pi (rho - J/c)
    lorentz = (1/c) dPhi/dt + div A
    """
    tt, xx, yy, zz = second_partials(P, at, h)
    wave = tt - (xx + yy + zz) - src.source_term(at) * (4 * math.pi)
    d = partials(P, at, h)
    # P returns Phi - A, hence the sign on the vector coefficients
    lorentz = d[0].s.real - sum(d[k + 1].v[k].real for k in range(3))
    return PotentialResidual(wave, lorentz)


# -- analytic catalog --------------------------------------------------------


def plane_wave(k: float = 1.0, E0: float = 1.0, prop=(1.0, 0.0, 0.0), pol=(0.0, 1.0, 0.0)):
    """E0 (p + i n x p) cos(k (n.x - ct)) in vacuum, with A = (E0/k) p sin(...)."""
    n = unit_vector(prop)
    p = unit_vector(pol)
    if abs(n @ p) > 1e-12:
        raise ValueError("polarization must be perpendicular to propagation")
    amp = Multivector(0, E0 * p + 1j * E0 * np.cross(n, p))

    def phase(X: Event) -> float:
        return k * (float(n @ np.asarray(X.x)) - X.ct)

    F = EMField(lambda X: amp * math.cos(phase(X)))
    P = Potential(lambda X: 0.0, lambda X: (E0 / k) * p * math.sin(phase(X)))
    return F, VACUUM, P


def constant_field(E0=(1.0, 0.0, 0.0), B0=(0.0, 0.0, 0.0)):
    """Uniform E0 + i B0, with Phi = -E0.x and A = (B0 x x)/2."""
    E0 = np.asarray(E0, dtype=float)
    B0 = np.asarray(B0, dtype=float)
    F0 = Multivector(0, E0 + 1j * B0)
    F = EMField(lambda X: F0)
    P = Potential(lambda X: -float(E0 @ np.asarray(X.x)),
                  lambda X: 0.5 * np.cross(B0, np.asarray(X.x)))
    return F, VACUUM, P


def coulomb(q: float = 1.0, center=(0.0, 0.0, 0.0)):
    """Static point charge: E = q r/|r|^3, Phi = q/|r|.  rho = 0 away from `center`."""
    x0 = np.asarray(center, dtype=float)

    def E(X: Event) -> Multivector:
        r = np.asarray(X.x) - x0
        return Multivector(0, q * r / np.linalg.norm(r) ** 3)

    def Phi(X: Event) -> float:
        return q / float(np.linalg.norm(np.asarray(X.x) - x0))

    return EMField(E), VACUUM, Potential(Phi, lambda X: np.zeros(3))


_CATALOG = {"plane_wave": plane_wave, "constant": constant_field, "coulomb": coulomb}


def analytic_field(kind: str, **params):
    """(EMField, FourCurrent, Potential) for a catalogued vacuum solution."""
    try:
        make = _CATALOG[kind]
    except KeyError:
        raise UnknownKind(f"unknown field kind {kind!r}; expected one of {sorted(_CATALOG)}")
    return make(**params)


def field_from_spec(spec: dict | str):
    """Build a catalogued field from its JSON description, e.g.

    {"kind": "plane_wave", "k": 1, "E0": 1, "prop": [1,0,0], "pol": [0,1,0]}
    {"kind": "constant", "E0": [1,0,0], "B0": [0,0,0]}
    {"kind": "coulomb", "q": 1}
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    spec = dict(spec)
    kind = spec.pop("kind", None)
    if kind is None:
        raise UnknownKind("field specification has no 'kind'")
    return analytic_field(kind, **spec)
