"""Scalar arithmetic for the four normed division algebras R, C, H, O.

A value is held as 1, 2, 4, or 8 real double-precision coefficients; for
octonions the coefficient order is (Re, i, j, k, l, il, jl, kl), i.e. the
second quaternion of the Cayley-Dickson pair carries the l, il, jl, kl
components.  Multiplication evaluates the doubling formula

    (p, q)(r, s) = (pr - conj(s) q, sp + q conj(r))

recursively on the coefficient halves.  This is the reference route used
by the dense-matrix oracles; the packed fast path goes through the
precomputed basis tables in ``jordanalg._kernels`` instead, and the two
are cross-checked in the tests.

R and C are commutative, H is associative but not commutative, and O is
only alternative: x(xy) = (xx)y.  The norm is multiplicative in all four:
|ab| = |a| |b|.
"""

from __future__ import annotations

import math

import numpy as np

from ._kernels.tables import BASIS_LABELS, WIDTHS
from .errors import ShapeError

__all__ = [
    "CompositionNumber",
    "cd_add",
    "cd_conjugate",
    "cd_multiply",
    "cd_norm",
    "cd_scale",
]


def _conj_raw(a: np.ndarray) -> np.ndarray:
    out = -a
    out[0] = a[0]
    return out


def _mul_raw(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if n == 1:
        return a * b
    h = n // 2
    p, q = a[:h], a[h:]
    r, s = b[:h], b[h:]
    return np.concatenate(
        [
            _mul_raw(p, r) - _mul_raw(_conj_raw(s), q),
            _mul_raw(s, p) + _mul_raw(q, _conj_raw(r)),
        ]
    )


class CompositionNumber:
    """One element of R, C, H, or O, as a fixed-length coefficient vector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] not in WIDTHS:
            raise ShapeError(
                f"coefficients must be a flat vector of length in {WIDTHS}, "
                f"got shape {arr.shape}"
            )
        arr.flags.writeable = False
        self.coeffs = arr

    @classmethod
    def zero(cls, width: int) -> CompositionNumber:
        return cls(np.zeros(width))

    @classmethod
    def one(cls, width: int) -> CompositionNumber:
        c = np.zeros(width)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def basis(cls, width: int, index: int) -> CompositionNumber:
        c = np.zeros(width)
        c[index] = 1.0
        return cls(c)

    @property
    def width(self) -> int:
        return self.coeffs.shape[0]

    def conjugate(self) -> CompositionNumber:
        return CompositionNumber(_conj_raw(self.coeffs))

    def norm(self) -> float:
        return math.sqrt(float(np.dot(self.coeffs, self.coeffs)))

    @property
    def real(self) -> float:
        return float(self.coeffs[0])

    def _check_width(self, other: CompositionNumber):
        if self.width != other.width:
            raise ShapeError(f"width mismatch: {self.width} vs {other.width}")

    def __add__(self, other):
        if not isinstance(other, CompositionNumber):
            return NotImplemented
        self._check_width(other)
        return CompositionNumber(self.coeffs + other.coeffs)

    def __sub__(self, other):
        if not isinstance(other, CompositionNumber):
            return NotImplemented
        self._check_width(other)
        return CompositionNumber(self.coeffs - other.coeffs)

    def __neg__(self):
        return CompositionNumber(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, CompositionNumber):
            self._check_width(other)
            return CompositionNumber(_mul_raw(self.coeffs, other.coeffs))
        if isinstance(other, (int, float)):
            return CompositionNumber(self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return CompositionNumber(self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return CompositionNumber(self.coeffs / float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CompositionNumber):
            return NotImplemented
        return self.width == other.width and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.width, self.coeffs.tobytes()))

    def __repr__(self):
        labels = BASIS_LABELS[self.width]
        parts = [f"{c:g}{'' if lab == 'Re' else ' ' + lab}"
                 for lab, c in zip(labels, self.coeffs)]
        return f"CompositionNumber({', '.join(parts)})"


def cd_multiply(a: CompositionNumber, b: CompositionNumber) -> CompositionNumber:
    """Cayley-Dickson product; associative up to width 4, alternative at 8."""
    if not isinstance(a, CompositionNumber) or not isinstance(b, CompositionNumber):
        raise TypeError("cd_multiply expects two CompositionNumbers")
    return a * b


def cd_conjugate(a: CompositionNumber) -> CompositionNumber:
    """Negate every imaginary coefficient.  conj(ab) = conj(b) conj(a)."""
    return a.conjugate()


def cd_add(a: CompositionNumber, b: CompositionNumber) -> CompositionNumber:
    return a + b


def cd_scale(alpha: float, a: CompositionNumber) -> CompositionNumber:
    return a * float(alpha)


def cd_norm(a: CompositionNumber) -> float:
    """Euclidean norm of the coefficient vector; satisfies |ab| = |a||b|."""
    return a.norm()
