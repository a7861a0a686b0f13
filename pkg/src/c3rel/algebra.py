"""The complex vector algebra C3 = C + C^3.

An element is a complex scalar plus a complex 3-vector, stored densely as
four complex coefficients on the basis (1, e1, e2, e3).  The real and
imaginary parts of those coefficients carry the four grades:

    real scalar      -> Re s
    vector           -> Re v
    bivector         -> Im v   (a ^ b = i (a x b))
    pseudoscalar     -> Im s   (i = e1 e2 e3)

Because the pseudoscalar is the central complex unit, the geometric product
of two elements reduces to complex arithmetic on these coefficients.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from .errors import NotInvertible

ATOL = 1e-12
NULL_SQUARE = 1e-14
INVERTIBLE_TOL = 1e-12

ComplexVector3 = tuple[complex, complex, complex]


def _cvec(v: Iterable) -> ComplexVector3:
    a, b, c = v
    return (complex(a), complex(b), complex(c))


def circ(A: Sequence[complex], B: Sequence[complex]) -> complex:
    """Complex scalar product sum_k a_k b_k (no conjugation)."""
    return A[0] * B[0] + A[1] * B[1] + A[2] * B[2]


def otimes(A: Sequence[complex], B: Sequence[complex]) -> ComplexVector3:
    """Complex vector product i (A x B), the cross product extended bilinearly."""
    return (
        1j * (A[1] * B[2] - A[2] * B[1]),
        1j * (A[2] * B[0] - A[0] * B[2]),
        1j * (A[0] * B[1] - A[1] * B[0]),
    )


@dataclass(frozen=True, slots=True)
class Multivector:
    """Element s + v of C3; `s` is complex, `v` a triple of complex numbers."""

    s: complex = 0j
    v: ComplexVector3 = (0j, 0j, 0j)

    def __post_init__(self):
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "v", _cvec(self.v))

    # -- construction -----------------------------------------------------

    @classmethod
    def scalar(cls, alpha: complex) -> Multivector:
        return cls(alpha)

    @classmethod
    def vector(cls, A: Iterable) -> Multivector:
        return cls(0j, A)

    @classmethod
    def from_grades(cls, g0: float = 0.0, g1=(0.0, 0.0, 0.0),
                    g2=(0.0, 0.0, 0.0), g3: float = 0.0) -> Multivector:
        """Assemble from real scalar, vector, bivector (as dual vector) and pseudoscalar."""
        return cls(complex(g0, g3), tuple(complex(a, b) for a, b in zip(g1, g2)))

    @classmethod
    def from_reals(cls, x: Sequence[float]) -> Multivector:
        """Inverse of :meth:`to_reals`."""
        return cls(complex(x[0], x[1]),
                   (complex(x[2], x[3]), complex(x[4], x[5]), complex(x[6], x[7])))

    def to_reals(self) -> np.ndarray:
        """The 8 real coordinates [Re s, Im s, Re v1, Im v1, ...]."""
        s, (a, b, c) = self.s, self.v
        return np.array([s.real, s.imag, a.real, a.imag, b.real, b.imag, c.real, c.imag])

    @property
    def coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.s, *self.v)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            a, b = self.v, other.v
            return Multivector(self.s + other.s, (a[0] + b[0], a[1] + b[1], a[2] + b[2]))
        if isinstance(other, Number):
            return Multivector(self.s + other, self.v)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        a = self.v
        return Multivector(-self.s, (-a[0], -a[1], -a[2]))

    def __sub__(self, other):
        if isinstance(other, (Multivector, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Number):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, Number):
            a = self.v
            return Multivector(self.s * other, (a[0] * other, a[1] * other, a[2] * other))
        return NotImplemented

    def __rmul__(self, other):
        # complex scalars are central
        if isinstance(other, Number):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return self * (1.0 / other)
        if isinstance(other, Multivector):
            return gp(self, minverse(other))
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- convenience wrappers --------------------------------------------

    def bar(self) -> Multivector:
        return bar(self)

    def cinv(self) -> Multivector:
        return cinv(self)

    def exp(self) -> Multivector:
        return mexp(self)

    def inverse(self) -> Multivector:
        return minverse(self)

    def grades(self):
        return grades(self)

    def norm(self) -> float:
        """Euclidean norm of the 8 real coordinates."""
        return math.sqrt(sum(abs(z) ** 2 for z in self.coeffs))

    def max_abs(self) -> float:
        return max(abs(z) for z in self.coeffs)

    def isclose(self, other, atol: float = ATOL) -> bool:
        """Componentwise comparison, tolerance scaled by the larger operand."""
        if isinstance(other, Number):
            other = Multivector(other)
        scale = max(1.0, self.max_abs(), other.max_abs())
        return all(abs(a - b) <= atol * scale for a, b in zip(self.coeffs, other.coeffs))

    def is_scalar(self, atol: float = ATOL) -> bool:
        return all(abs(z) <= atol * max(1.0, abs(self.s)) for z in self.v)

    def is_complex_vector(self, atol: float = ATOL) -> bool:
        return abs(self.s) <= atol * max(1.0, self.max_abs())

    def __repr__(self):
        return f"Multivector(s={self.s!r}, v={self.v!r})"

    def __str__(self):
        terms = []
        for z, name in zip(self.coeffs, ("", "e1", "e2", "e3")):
            if z == 0:
                continue
            if z.imag == 0:
                coef = f"{z.real:g}"
            elif z.real == 0:
                coef = f"{z.imag:g}i"
            else:
                coef = f"({z.real:g}{z.imag:+g}i)"
            terms.append(coef + ("*" + name if name else ""))
        return " + ".join(terms) if terms else "0"

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {"s": [self.s.real, self.s.imag],
                "v": [[z.real, z.imag] for z in self.v]}

    @classmethod
    def from_dict(cls, d: dict) -> Multivector:
        s = d.get("s", [0.0, 0.0])
        v = d.get("v", [[0.0, 0.0]] * 3)
        if len(s) != 2 or len(v) != 3 or any(len(z) != 2 for z in v):
            raise ValueError("multivector JSON needs s=[re,im] and v=[[re,im]]*3")
        return cls(complex(float(s[0]), float(s[1])),
                   tuple(complex(float(a), float(b)) for a, b in v))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> Multivector:
        return cls.from_dict(json.loads(text))


ZERO = Multivector()
ONE = Multivector(1)
I = Multivector(1j)
E1 = Multivector(0, (1, 0, 0))
E2 = Multivector(0, (0, 1, 0))
E3 = Multivector(0, (0, 0, 1))


def gp(M: Multivector, N: Multivector) -> Multivector:
    """Complex geometric product.

    (a + A)(b + B) = ab + A o B + aB + bA + A (x) B; the vector-vector part is
    the sum of the complex scalar and complex vector products.
    """
    a, A = M.s, M.v
    b, B = N.s, N.v
    cross = otimes(A, B)
    return Multivector(
        a * b + circ(A, B),
        (a * B[0] + b * A[0] + cross[0],
         a * B[1] + b * A[1] + cross[1],
         a * B[2] + b * A[2] + cross[2]),
    )


def grades(M: Multivector) -> tuple[float, np.ndarray, np.ndarray, float]:
    """Split into (real scalar, real vector, bivector dual vector, pseudoscalar)."""
    v = np.array(M.v)
    return M.s.real, v.real.copy(), v.imag.copy(), M.s.imag


def bar(M: Multivector) -> Multivector:
    """Proper conjugation of the canonical frame: conjugate every coefficient.

    Fixes real scalars and vectors, negates bivectors and the pseudoscalar,
    and reverses products.
    """
    a = M.v
    return Multivector(M.s.conjugate(), (a[0].conjugate(), a[1].conjugate(), a[2].conjugate()))


def cinv(M: Multivector) -> Multivector:
    """Complex-vector inversion a + A -> a - A."""
    a = M.v
    return Multivector(M.s, (-a[0], -a[1], -a[2]))


def mexp(M: Multivector) -> Multivector:
    """Exponential e^(a + A) = e^a (cosh r + A sinh(r)/r) with r^2 = A o A.

    cosh r and sinh(r)/r are even in r, so the branch of the square root is
    irrelevant.  Near the null cone the Taylor series in r^2 is used, which
    reduces to e^a (1 + A) when A^2 = 0.
    """
    A = M.v
    r2 = circ(A, A)
    if abs(r2) < NULL_SQUARE:
        ch = 1 + r2 / 2
        sh_r = 1 + r2 / 6
    else:
        r = cmath.sqrt(r2)
        ch = cmath.cosh(r)
        sh_r = cmath.sinh(r) / r
    ea = cmath.exp(M.s)
    k = ea * sh_r
    return Multivector(ea * ch, (k * A[0], k * A[1], k * A[2]))


def minverse(M: Multivector) -> Multivector:
    """Multiplicative inverse M^- / (M M^-).

    M M^- = a^2 - A o A is always a complex scalar; it vanishes on null elements
    such as 1 + e1, which raise :class:`NotInvertible`.
    """
    det = M.s * M.s - circ(M.v, M.v)
    if abs(det) < INVERTIBLE_TOL:
        raise NotInvertible(f"{M} is null (M M^- = {det})")
    return cinv(M) * (1 / det)


def sandwich(R: Multivector, M: Multivector) -> Multivector:
    """R M R^-1."""
    return R * M * minverse(R)
