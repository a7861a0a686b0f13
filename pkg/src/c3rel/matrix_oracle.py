"""Faithful 2x2 complex matrix representation of C3 (the Pauli algebra).

Used as an independent check on the coefficient arithmetic in
:mod:`c3rel.algebra`.  Nothing here calls the algebra's products: elements are
mapped to matrices, the matrix operation is done with numpy/scipy, and the
result is mapped back.

The generator images below are the one place the convention is fixed.  They
are Hermitian, so the proper conjugation maps to the conjugate transpose.
"""

import numpy as np
from scipy.linalg import expm

from .algebra import Multivector

SIGMA0 = np.eye(2, dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
_BASIS = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)


def to_matrix(M: Multivector) -> np.ndarray:
    s, (a, b, c) = M.s, M.v
    return np.array([[s + c, a - 1j * b],
                     [a + 1j * b, s - c]], dtype=complex)


def from_matrix(m) -> Multivector:
    """Invert :func:`to_matrix` with the trace formula  c_k = tr(sigma_k m) / 2."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    c = [np.trace(sk @ m) / 2 for sk in _BASIS]
    return Multivector(complex(c[0]), (complex(c[1]), complex(c[2]), complex(c[3])))


def adjoint(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def adjugate(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]],
                     [-m[1, 0], m[0, 0]]], dtype=complex)


def gp(M: Multivector, N: Multivector) -> Multivector:
    return from_matrix(to_matrix(M) @ to_matrix(N))


def bar(M: Multivector) -> Multivector:
    return from_matrix(adjoint(to_matrix(M)))


def cinv(M: Multivector) -> Multivector:
    return from_matrix(adjugate(to_matrix(M)))


def det(M: Multivector) -> complex:
    """det of the matrix image; equals the scalar M M^-."""
    return complex(np.linalg.det(to_matrix(M)))


def mexp(M: Multivector) -> Multivector:
    return from_matrix(expm(to_matrix(M)))
