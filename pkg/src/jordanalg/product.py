"""The Jordan product and its dense-matrix cross-checks.

Matrix kinds multiply as pack((M_x M_y + M_y M_x)/2) on the dense forms;
entry arithmetic runs through the kernel backend.  Spin factors use the
(a, vec) rule directly.  Both paths keep x*y and y*x coordinatewise
identical: the matrix rule adds the two dense products (float addition is
commutative bitwise) and the spin rule is written term-symmetric.

The naive multiply below is the correctness oracle for the kernels: a
plain triple loop over entry objects whose coefficient arithmetic comes
from the recursive doubling route, not the basis tables.
"""

from __future__ import annotations

import numpy as np

from ._kernels import comp_matmul
from .composition import CompositionNumber
from .elements import DenseMatrix, JordanElement, _pack, _unpack
from .errors import ShapeError, UnsupportedKindError
from .report import ResidualReport

__all__ = [
    "dense_jordan_arrays",
    "dense_oracle_check",
    "jordan_product",
    "naive_matmul",
    "symmetry_preservation_check",
]


def _spin_product(x: JordanElement, y: JordanElement) -> JordanElement:
    shape = x.shape
    a, avec = x.coords[0], x.coords[1:]
    b, bvec = y.coords[0], y.coords[1:]
    weights = np.asarray(shape.ip_weights)
    # each term is symmetric in (x, y), so swapping operands is a no-op bitwise
    scalar = a * b + float(np.sum(weights * (avec * bvec)))
    vec = a * bvec + b * avec
    return JordanElement(shape, np.concatenate(([scalar], vec)))


def dense_jordan_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(ab + ba)/2 on raw (d, d, w) coefficient arrays."""
    return 0.5 * (comp_matmul(a, b) + comp_matmul(b, a))


def jordan_product(x: JordanElement, y: JordanElement) -> JordanElement:
    """x o y = (xy + yx)/2 for matrix kinds; the (a, vec) rule for spin."""
    if x.shape != y.shape:
        raise ShapeError(f"shape mismatch: {x.shape!r} vs {y.shape!r}")
    if x.shape.kind == "spin":
        return _spin_product(x, y)
    shape = x.shape
    prod = dense_jordan_arrays(_unpack(shape, x.coords), _unpack(shape, y.coords))
    return JordanElement(shape, _pack(shape, prod))


def naive_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Entrywise triple-loop matrix multiply over composition numbers.

    Accumulates in ascending k with one addition per term, matching the
    kernels' accumulation order so width-1 results agree bit for bit.
    """
    d, w = a.shape[0], a.shape[2]
    out = np.zeros_like(a)
    for i in range(d):
        for j in range(d):
            acc = CompositionNumber.zero(w)
            for k in range(d):
                acc = acc + CompositionNumber(a[i, k]) * CompositionNumber(b[k, j])
            out[i, j, :] = acc.coeffs
    return out


def dense_oracle_check(x: JordanElement, y: JordanElement) -> ResidualReport:
    """Packed-route product vs a naive dense (M_x M_y + M_y M_x)/2.

    The oracle multiply shares no code with the kernels, so this guards
    the whole pack -> multiply -> pack path.  Width-1 residuals are
    exactly 0; wider entries only reorder coefficient additions, keeping
    the residual at roundoff.
    """
    if not x.shape.is_matrix:
        raise UnsupportedKindError("dense oracle applies to matrix kinds only")
    shape = x.shape
    packed = jordan_product(x, y)
    ma, mb = _unpack(shape, x.coords), _unpack(shape, y.coords)
    oracle = 0.5 * (naive_matmul(ma, mb) + naive_matmul(mb, ma))
    residual = float(np.max(np.abs(_unpack(shape, packed.coords) - oracle)))
    return ResidualReport.from_trials(shape, "dense_oracle", [residual])


def symmetry_preservation_check(x: JordanElement, y: JordanElement) -> ResidualReport:
    """Hermitian defect of the raw dense product (M_x M_y + M_y M_x)/2.

    Checked before packing; packing would symmetrize and hide a defect.
    """
    if not x.shape.is_matrix:
        raise UnsupportedKindError("symmetry check applies to matrix kinds only")
    shape = x.shape
    raw = dense_jordan_arrays(_unpack(shape, x.coords), _unpack(shape, y.coords))
    defect = DenseMatrix(raw).hermitian_defect()
    return ResidualReport.from_trials(shape, "symmetry_preservation", [defect])
