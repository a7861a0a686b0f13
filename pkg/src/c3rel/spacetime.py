"""Events, rotations and boosts, and Lorentz coordinate transforms.

An event in an inertial system is the paravector X = ct + x.  Active
rotations and boosts act by the half-angle sandwich

    x' = exp(-theta i n / 2) x exp(theta i n / 2)       (rotation about n)
    x' = exp(-phi d / 2) x exp(phi d / 2)               (boost along d)

and the coordinates of the same event seen from a system moving with
velocity v d are read off from exp(phi d / 2) X exp(phi d / 2), which gives

    t' = (t + v x/c^2) / sqrt(1 - v^2/c^2),   x' = (x + v t) / sqrt(1 - v^2/c^2)

for the component x along d; the transverse components are unchanged.  Note
the sign: with this convention a point at rest in the unprimed system moves
with velocity +v in the primed one.  Passing -v gives the opposite reading
(the particle's rest system used in :mod:`c3rel.kinematics`).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import E1, E2, E3, I, Multivector, minverse, mexp
from .errors import InvalidFrame, NonUnitDirection, SpeedNotSubluminal

UNIT_TOL = 1e-12
FRAME_TOL = 1e-12

X_AXIS = (1.0, 0.0, 0.0)


def unit_vector(direction: Sequence[float]) -> np.ndarray:
    """Validate that `direction` is a real unit 3-vector and return it as an array."""
    d = np.asarray(direction, dtype=float)
    if d.shape != (3,) or not np.all(np.isfinite(d)):
        raise NonUnitDirection(f"direction must be a finite 3-vector, got {direction!r}")
    n = float(np.linalg.norm(d))
    if abs(n - 1.0) > UNIT_TOL:
        raise NonUnitDirection(f"|direction| = {n!r}, expected 1")
    return d


def normalized(direction: Sequence[float]) -> np.ndarray:
    """Scale a non-negligible vector to unit length."""
    d = np.asarray(direction, dtype=float)
    n = float(np.linalg.norm(d))
    if not n > UNIT_TOL:
        raise NonUnitDirection("direction has (near) zero length")
    return d / n


def rapidity_from_speed(v: float, c: float = 1.0) -> float:
    if not abs(v) < c:
        raise SpeedNotSubluminal(f"|v| = {abs(v)!r} is not below c = {c!r}")
    return math.atanh(v / c)


def speed_from_rapidity(phi: float, c: float = 1.0) -> float:
    return c * math.tanh(phi)


@dataclass(frozen=True)
class Rapidity:
    phi: float
    direction: tuple[float, float, float] = X_AXIS

    def __post_init__(self):
        object.__setattr__(self, "direction", tuple(unit_vector(self.direction).tolist()))

    def speed(self, c: float = 1.0) -> float:
        return speed_from_rapidity(self.phi, c)

    def velocity(self, c: float = 1.0) -> np.ndarray:
        return self.speed(c) * np.asarray(self.direction)


@dataclass(frozen=True)
class Event:
    """Spacetime point: time `t`, position `x`, and the speed of light `c`."""

    t: float
    x: tuple[float, float, float] = (0.0, 0.0, 0.0)
    c: float = 1.0

    def __post_init__(self):
        x = tuple(float(a) for a in self.x)
        if len(x) != 3:
            raise ValueError(f"position must have 3 components, got {len(x)}")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c!r}")
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "c", float(self.c))

    @property
    def ct(self) -> float:
        return self.c * self.t

    def as_multivector(self) -> Multivector:
        return Multivector(self.ct, self.x)

    @classmethod
    def from_multivector(cls, X: Multivector, c: float = 1.0) -> Event:
        """Read ct and x off the real scalar and real vector parts of X."""
        return cls(X.s.real / c, tuple(z.real for z in X.v), c)

    def shifted(self, dt: float = 0.0, dx: Sequence[float] = (0.0, 0.0, 0.0)) -> Event:
        return Event(self.t + dt, tuple(a + b for a, b in zip(self.x, dx)), self.c)

    def to_dict(self) -> dict:
        return {"t": self.t, "x": list(self.x), "c": self.c}

    @classmethod
    def from_dict(cls, d: dict, c: float | None = None) -> Event:
        cc = d.get("c", c if c is not None else 1.0)
        return cls(float(d["t"]), tuple(float(a) for a in d.get("x", (0, 0, 0))), float(cc))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Event:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Frame:
    """Orthonormal right-handed frame: f_k^2 = 1, f_j f_k = -f_k f_j, f1 f2 f3 = i."""

    f1: Multivector
    f2: Multivector
    f3: Multivector

    def __post_init__(self):
        fs = (self.f1, self.f2, self.f3)
        for k, f in enumerate(fs):
            if not (f * f).isclose(1, FRAME_TOL):
                raise InvalidFrame(f"f{k + 1}^2 != 1")
        for j in range(3):
            for k in range(j + 1, 3):
                if not (fs[j] * fs[k] + fs[k] * fs[j]).isclose(0, FRAME_TOL):
                    raise InvalidFrame(f"f{j + 1}, f{k + 1} do not anticommute")
        if not (self.f1 * self.f2 * self.f3).isclose(I, FRAME_TOL):
            raise InvalidFrame("f1 f2 f3 != i")

    @classmethod
    def canonical(cls) -> Frame:
        return cls(E1, E2, E3)

    def __iter__(self):
        return iter((self.f1, self.f2, self.f3))


def rotor(axis: Sequence[float], theta: float) -> Multivector:
    """exp(-theta i n / 2); acts by R x R^-1."""
    n = unit_vector(axis)
    return mexp(Multivector.vector(n) * (-0.5j * theta))


def boost_versor(direction: Sequence[float], phi: float) -> Multivector:
    """exp(-phi d / 2); acts by B x B^-1."""
    d = unit_vector(direction)
    return mexp(Multivector.vector(d) * (-0.5 * phi))


@dataclass(frozen=True)
class Versor:
    """Half-angle exponential R applied as R M R^-1.

    Rotation versors are unitary (bar R = R^-1); boost versors are Hermitian
    (bar R = R).
    """

    R: Multivector
    kind: str

    @classmethod
    def rotation(cls, axis: Sequence[float], theta: float) -> Versor:
        return cls(rotor(axis, theta), "rotation")

    @classmethod
    def boost(cls, direction: Sequence[float], phi: float) -> Versor:
        return cls(boost_versor(direction, phi), "boost")

    def apply(self, M: Multivector) -> Multivector:
        return self.R * M * minverse(self.R)

    def __mul__(self, other: Versor) -> Versor:
        kind = self.kind if self.kind == other.kind == "rotation" else "mixed"
        return Versor(self.R * other.R, kind)

    def to_dict(self) -> dict:
        return self.R.to_dict()


def active_rotate(M: Multivector, axis: Sequence[float], theta: float) -> Multivector:
    """Rotate M through `theta` in the plane of the bivector i*axis."""
    n = Multivector.vector(unit_vector(axis))
    return mexp(n * (-0.5j * theta)) * M * mexp(n * (0.5j * theta))


def active_boost(M: Multivector, direction: Sequence[float], phi: float) -> Multivector:
    """Give M the rapidity `phi` along `direction`."""
    d = Multivector.vector(unit_vector(direction))
    return mexp(d * (-0.5 * phi)) * M * mexp(d * (0.5 * phi))


def universal_map(X: Event, phi: float, direction: Sequence[float] = X_AXIS) -> Multivector:
    """One-sided map X -> X exp(phi d).

    For events with position transverse to `d` this is not a paravector (it
    picks up bivector parts); use :func:`lorentz_coords` for coordinates.
    """
    d = Multivector.vector(unit_vector(direction))
    return X.as_multivector() * mexp(d * phi)


def passive_boost(X: Event, phi: float, direction: Sequence[float] = X_AXIS) -> Multivector:
    """exp(phi d / 2) X exp(phi d / 2)."""
    h = mexp(Multivector.vector(unit_vector(direction)) * (0.5 * phi))
    return h * X.as_multivector() * h


def lorentz_coords(X: Event, v: float, direction: Sequence[float] = X_AXIS) -> Event:
    """Coordinates of event X in the system moving with velocity v*direction.

    The boost along the canonical x-axis is the reference case.  For any other
    unit `direction` the same two-sided product applies directly; it equals
    rotating `direction` onto e1, boosting, and rotating back.
    """
    phi = rapidity_from_speed(v, X.c)
    return Event.from_multivector(passive_boost(X, phi, direction), X.c)


def galilean_coords(X: Event, v: float, direction: Sequence[float] = X_AXIS) -> Event:
    """t' = t, x' = x + v t d."""
    d = unit_vector(direction)
    return Event(X.t, tuple(np.asarray(X.x) + v * X.t * d), X.c)


def boost_frame(F: Frame, direction: Sequence[float], phi: float) -> Frame:
    return Frame(*(active_boost(f, direction, phi) for f in F))


def rotate_frame(F: Frame, axis: Sequence[float], theta: float) -> Frame:
    return Frame(*(active_rotate(f, axis, theta) for f in F))


def interval(X: Event) -> float:
    """Spacetime interval X X^- = c^2 t^2 - |x|^2."""
    XX = X.as_multivector() * X.as_multivector().cinv()
    return XX.s.real


def compose_collinear_boosts(phi1: float, phi2: float,
                             direction: Sequence[float] = X_AXIS) -> Rapidity:
    """exp(phi1 d) exp(phi2 d) = exp((phi1 + phi2) d)."""
    return Rapidity(phi1 + phi2, tuple(unit_vector(direction)))
