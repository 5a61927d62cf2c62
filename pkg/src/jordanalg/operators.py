"""Higher Jordan operators and polynomial identity residuals.

Everything is built from the product: L, the quadratic map U, its
linearization U2, the triple bracket, and the degree-8/9 homogeneous
polynomials whose (x, y)-antisymmetrizations G8 and G9 separate special
algebras from the exceptional one.
"""

from __future__ import annotations

import numpy as np

from .elements import JordanElement, _pack, _unpack
from .errors import ShapeError, UnsupportedKindError
from .product import naive_matmul
from .report import ResidualReport

__all__ = [
    "g8",
    "g9",
    "h8",
    "h9",
    "jacobson_diff",
    "jacobson_residual",
    "op_L",
    "op_U",
    "op_U2",
    "triple_bracket",
    "u_special_oracle_check",
]


def op_L(x: JordanElement):
    """Left multiplication map y -> x o y."""

    def apply(y: JordanElement) -> JordanElement:
        return x * y

    return apply


def op_U(x: JordanElement):
    """Quadratic map y -> 2 x(xy) - (xx)y."""
    xx = x * x

    def apply(y: JordanElement) -> JordanElement:
        return 2.0 * (x * (x * y)) - xx * y

    return apply


def op_U2(x: JordanElement, y: JordanElement):
    """Linearized quadratic map z -> x(yz) + y(xz) - (xy)z."""
    xy = x * y

    def apply(z: JordanElement) -> JordanElement:
        return x * (y * z) + y * (x * z) - xy * z

    return apply


def triple_bracket(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """{x,y,z} = 2(x(yz) + (xy)z - (xz)y)."""
    return 2.0 * (x * (y * z) + (x * y) * z - (x * z) * y)


def jacobson_diff(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """U_x U_y U_x (z) minus U_{U_x(y)} (z); near zero in every kind."""
    ux = op_U(x)
    lhs = ux(op_U(y)(ux(z)))
    rhs = op_U(ux(y))(z)
    return lhs - rhs


def jacobson_residual(x: JordanElement, y: JordanElement, z: JordanElement) -> ResidualReport:
    return ResidualReport.from_trials(
        x.shape, "jacobson", [jacobson_diff(x, y, z).max_abs()]
    )


def h8(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """Degree-8 generator: {U_x U_y(z), z, xy} - U_x U_y U_z(xy)."""
    ux, uy, uz = op_U(x), op_U(y), op_U(z)
    xy = x * y
    return triple_bracket(ux(uy(z)), z, xy) - ux(uy(uz(xy)))


def h9(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """Degree-9 generator: 2 U_x(z)(U_{y,x} U_z(yy)) - U_x U_z U_{x,y} U_y(z).

    The first term is a Jordan product of the two operator values.
    """
    ux, uz, uy = op_U(x), op_U(z), op_U(y)
    first = 2.0 * (ux(z) * op_U2(y, x)(uz(y * y)))
    second = ux(uz(op_U2(x, y)(uy(z))))
    return first - second


def g8(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """G8 = H8(x,y,z) - H8(y,x,z); vanishes exactly on special algebras."""
    return h8(x, y, z) - h8(y, x, z)


def g9(x: JordanElement, y: JordanElement, z: JordanElement) -> JordanElement:
    """G9 = H9(x,y,z) - H9(y,x,z); vanishes exactly on special algebras."""
    return h9(x, y, z) - h9(y, x, z)


def u_special_oracle_check(x: JordanElement, y: JordanElement) -> ResidualReport:
    """U_x(y) against the associative-envelope form x y x.

    Valid for rsm/chm/qhm, whose entry algebras are associative; the
    dense route uses the naive entrywise multiply, independent of the
    kernels behind op_U.
    """
    shape = x.shape
    if shape.kind not in ("rsm", "chm", "qhm"):
        raise UnsupportedKindError("the xyx form needs an associative entry algebra")
    if shape != y.shape:
        raise ShapeError(f"shape mismatch: {shape!r} vs {y.shape!r}")
    mx, my = _unpack(shape, x.coords), _unpack(shape, y.coords)
    oracle = naive_matmul(naive_matmul(mx, my), mx)
    packed = op_U(x)(y)
    residual = float(np.max(np.abs(_unpack(shape, packed.coords) - oracle)))
    return ResidualReport.from_trials(shape, "u_special_oracle", [residual])
