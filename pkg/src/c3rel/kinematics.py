"""Spacetime velocity, time dilation, relative mass and momentum, and the work
needed to bring a rest mass up to light speed.

Newton's second law is used with the relative mass, F = m a, so the work
integral is  int_0^c m v dv = m0 int_0^c v dv / sqrt(1 - v^2/c^2) = m0 c^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .algebra import Multivector
from .errors import SpeedNotSubluminal, SuperluminalSample
from .spacetime import X_AXIS, rapidity_from_speed, unit_vector

GAUSS_NODES = 32


@dataclass(frozen=True)
class Worldline:
    """Particle history t -> x(t) in one inertial system."""

    position: Callable[[float], Sequence[float]]
    c: float = 1.0

    def event(self, t: float) -> Multivector:
        """X(t) = ct + x(t)."""
        return Multivector(self.c * t, np.asarray(self.position(t), dtype=float))


@dataclass(frozen=True)
class Particle:
    m0: float

    def __post_init__(self):
        if self.m0 < 0:
            raise ValueError(f"rest mass must be non-negative, got {self.m0!r}")


def default_dt(t: float) -> float:
    return 1e-6 * max(1.0, abs(t))


def st_velocity(w: Worldline, t: float, dt: float | None = None) -> Multivector:
    """V = dX/dt = c + dx/dt by central difference."""
    dt = default_dt(t) if dt is None else dt
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    xp = np.asarray(w.position(t + dt), dtype=float)
    xm = np.asarray(w.position(t - dt), dtype=float)
    v = (xp - xm) / (2 * dt)
    if not np.linalg.norm(v) < w.c:
        raise SuperluminalSample(f"|dx/dt| = {np.linalg.norm(v)!r} >= c at t = {t!r}")
    return Multivector(w.c, v)


def time_dilation(phi: float) -> float:
    """dt/dt' = cosh(phi) = 1/sqrt(1 - v^2/c^2)."""
    return math.cosh(phi)


def lorentz_factor(v: float, c: float = 1.0) -> float:
    if not abs(v) < c:
        raise SpeedNotSubluminal(f"|v| = {abs(v)!r} is not below c = {c!r}")
    return 1.0 / math.sqrt(1.0 - (v / c) ** 2)


def relative_mass(m0: float, v: float, c: float = 1.0) -> float:
    if m0 < 0:
        raise ValueError(f"rest mass must be non-negative, got {m0!r}")
    return m0 * lorentz_factor(v, c)


def st_momentum(m0: float, v: float, direction: Sequence[float] = X_AXIS,
                c: float = 1.0) -> Multivector:
    """P = m c V = m c^2 + c m v d; the scalar part is the total energy."""
    d = unit_vector(direction)
    m = relative_mass(m0, v, c)
    return Multivector(m * c * c, c * m * v * d)


def work_to_light(m0: float, c: float = 1.0) -> float:
    """Work m0 int_0^c v dv / sqrt(1 - v^2/c^2), evaluated numerically.

    The substitution s = sqrt(1 - v^2/c^2) moves the endpoint singularity out
    of the integrand: v dv / s = -c^2 ds, a constant, so 32-point
    Gauss-Legendre on s in [0, 1] is exact up to rounding.
    """
    if m0 < 0 or not c > 0:
        raise ValueError("need m0 >= 0 and c > 0")
    s, w = np.polynomial.legendre.leggauss(GAUSS_NODES)
    s = 0.5 * (s + 1.0)
    w = 0.5 * w
    v = c * np.sqrt(1.0 - s * s)
    dv_ds = c * s / np.sqrt(1.0 - s * s)  # |dv/ds|; orientation flips the limits
    integrand = m0 * v * dv_ds / s
    return float(np.sum(w * integrand))


def kinematics_report(m0: float, v: float, direction: Sequence[float] = X_AXIS,
                      c: float = 1.0) -> dict:
    phi = rapidity_from_speed(v, c)
    P = st_momentum(m0, v, direction, c)
    return {
        "v": v,
        "phi": phi,
        "gamma": time_dilation(phi),
        "m": relative_mass(m0, v, c),
        "energy": P.s.real,
        "momentum": [z.real / c for z in P.v],
    }
