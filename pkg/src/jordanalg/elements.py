"""Packed element storage and dense-matrix coercion.

Matrix-kind elements are stored as one packed coordinate column:

* ``rsm`` uses vech order: the lower triangle including the diagonal,
  column-major, so d=2 coords (a, b, c) mean [[a, b], [b, c]].
* ``chm``/``qhm``/``albert``/``oherm`` store the d real diagonal entries
  first, then each strict lower-triangle entry in column-major order as a
  full coefficient block in basis order (Re, i, ..., kl).  For albert this
  yields the 27-row label order d1, d2, d3, o1=(2,1), o2=(3,1), o3=(3,2).
* ``spin`` elements are (scalar, vector) as n+1 coordinates.

The dense form of a matrix-kind element is a (d, d, width) coefficient
array, Hermitian by construction with a pure-real diagonal.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .composition import CompositionNumber
from .errors import ShapeError, UnsupportedKindError, ValidationError
from .shapes import AlgebraShape

__all__ = [
    "DenseMatrix",
    "JordanElement",
    "JordanVector",
    "add",
    "add_unit_multiple",
    "equal_approx",
    "from_dense",
    "negate",
    "scalar_add",
    "scalar_multiply",
    "subtract",
    "to_dense",
    "unit_element",
    "zero_element",
]


# ---------------------------------------------------------------------------
# packed <-> dense layout


@lru_cache(maxsize=None)
def _layout(kind: str, d: int):
    """Scatter/gather maps between a packed column and the flat (d,d,w) array.

    Returns (main, mirror, mirror_sign): writing coords to ``main`` and
    coords*sign to ``mirror`` fills a Hermitian dense array; gathering
    ``main`` packs it back.
    """
    shape = AlgebraShape(kind, d=d)
    w = shape.entry_width
    length = shape.packed_length
    main = np.empty(length, dtype=np.intp)
    mirror = np.empty(length, dtype=np.intp)
    sign = np.empty(length)

    def flat(i, j, c):
        return (i * d + j) * w + c

    pos = 0
    if kind == "rsm":
        for j in range(d):
            for i in range(j, d):
                main[pos] = flat(i, j, 0)
                mirror[pos] = flat(j, i, 0)
                sign[pos] = 1.0
                pos += 1
    else:
        for i in range(d):
            main[pos] = flat(i, i, 0)
            mirror[pos] = flat(i, i, 0)
            sign[pos] = 1.0
            pos += 1
        for j in range(d):
            for i in range(j + 1, d):
                for c in range(w):
                    main[pos] = flat(i, j, c)
                    mirror[pos] = flat(j, i, c)
                    sign[pos] = 1.0 if c == 0 else -1.0
                    pos += 1
    assert pos == length
    for arr in (main, mirror, sign):
        arr.flags.writeable = False
    return main, mirror, sign


def _unpack(shape: AlgebraShape, coords: np.ndarray) -> np.ndarray:
    """Packed column -> Hermitian (d, d, w) coefficient array."""
    d, w = shape.d, shape.entry_width
    main, mirror, sign = _layout(shape.kind, d)
    flat = np.zeros(d * d * w)
    flat[main] = coords
    flat[mirror] = coords * sign
    return flat.reshape(d, d, w)


def _pack(shape: AlgebraShape, dense: np.ndarray) -> np.ndarray:
    """(d, d, w) array -> packed column (lower-triangle representative)."""
    main, _, _ = _layout(shape.kind, shape.d)
    return dense.reshape(-1)[main]


def _conj_transpose(arr: np.ndarray) -> np.ndarray:
    out = arr.transpose(1, 0, 2).copy()
    out[:, :, 1:] *= -1.0
    return out


# ---------------------------------------------------------------------------
# dense matrices


class DenseMatrix:
    """A d x d grid of composition-algebra entries as a (d, d, w) array."""

    __slots__ = ("array",)

    def __init__(self, array):
        arr = np.array(array, dtype=np.float64)
        if arr.ndim == 2:
            arr = arr[:, :, np.newaxis]
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"expected a (d, d, width) array, got shape {arr.shape}")
        if arr.shape[2] not in (1, 2, 4, 8):
            raise ShapeError(f"entry width must be 1, 2, 4, or 8, got {arr.shape[2]}")
        arr.flags.writeable = False
        self.array = arr

    @classmethod
    def from_entries(cls, entries) -> DenseMatrix:
        """Build from a nested list of CompositionNumbers."""
        d = len(entries)
        widths = {e.width for row in entries for e in row}
        if len(widths) != 1:
            raise ShapeError("all entries must share one width")
        (w,) = widths
        arr = np.zeros((d, d, w))
        for i, row in enumerate(entries):
            if len(row) != d:
                raise ShapeError("entry grid must be square")
            for j, e in enumerate(row):
                arr[i, j, :] = e.coeffs
        return cls(arr)

    @property
    def d(self) -> int:
        return self.array.shape[0]

    @property
    def width(self) -> int:
        return self.array.shape[2]

    def entry(self, i: int, j: int) -> CompositionNumber:
        return CompositionNumber(self.array[i, j, :])

    def conj_transpose(self) -> DenseMatrix:
        return DenseMatrix(_conj_transpose(self.array))

    def hermitian_defect(self) -> float:
        """max |M - M^H| over all coefficients (0 for exactly Hermitian)."""
        return float(np.max(np.abs(self.array - _conj_transpose(self.array))))

    def diagonal_imag_max(self) -> float:
        if self.width == 1:
            return 0.0
        diag = self.array[np.arange(self.d), np.arange(self.d), 1:]
        return float(np.max(np.abs(diag))) if diag.size else 0.0

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.array.shape == other.array.shape and bool(
            np.array_equal(self.array, other.array)
        )

    def __hash__(self):
        return hash((self.array.shape, self.array.tobytes()))

    def __repr__(self):
        return f"DenseMatrix(d={self.d}, width={self.width})"

    def __str__(self):
        from .formatting import format_dense

        return format_dense(self)


# ---------------------------------------------------------------------------
# elements


class JordanElement:
    """One element of a Jordan algebra, as an immutable packed column.

    ``+`` and ``-`` accept another element or a real scalar; a scalar is
    added to every packed coordinate.  ``*`` with another element is the
    Jordan product, ``*`` with a real is coordinatewise scaling.
    """

    __slots__ = ("shape", "coords")

    def __init__(self, shape: AlgebraShape, coords):
        arr = np.array(coords, dtype=np.float64).reshape(-1)
        if arr.shape[0] != shape.packed_length:
            raise ShapeError(
                f"{shape!r} needs {shape.packed_length} coordinates, got {arr.shape[0]}"
            )
        arr.flags.writeable = False
        self.shape = shape
        self.coords = arr

    def _check_shape(self, other: JordanElement):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape!r} vs {other.shape!r}")

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coords)))

    def __add__(self, other):
        if isinstance(other, JordanElement):
            self._check_shape(other)
            return JordanElement(self.shape, self.coords + other.coords)
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, self.coords + float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, JordanElement):
            self._check_shape(other)
            return JordanElement(self.shape, self.coords - other.coords)
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, self.coords - float(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, float(other) - self.coords)
        return NotImplemented

    def __neg__(self):
        return JordanElement(self.shape, -self.coords)

    def __mul__(self, other):
        if isinstance(other, JordanElement):
            from .product import jordan_product

            return jordan_product(self, other)
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, self.coords * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, self.coords * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return JordanElement(self.shape, self.coords / float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, JordanElement):
            return NotImplemented
        return self.shape == other.shape and bool(
            np.array_equal(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.shape, self.coords.tobytes()))

    def __repr__(self):
        return f"JordanElement({self.shape!r}, {self.coords.tolist()})"

    def __str__(self):
        from .formatting import format_vector

        return format_vector(JordanVector.from_elements([self]))


class JordanVector:
    """An ordered collection of same-shape elements, one per column.

    Columns are indexed 0-based in code (``v[0]`` is the first element);
    the display labels columns 1-based like the printed output.  Arithmetic
    applies columnwise.
    """

    __slots__ = ("shape", "data")

    def __init__(self, shape: AlgebraShape, data):
        arr = np.array(data, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr[:, np.newaxis]
        if arr.ndim != 2 or arr.shape[0] != shape.packed_length:
            raise ShapeError(
                f"{shape!r} needs ({shape.packed_length}, n_columns) data, "
                f"got shape {arr.shape}"
            )
        arr.flags.writeable = False
        self.shape = shape
        self.data = arr

    @classmethod
    def from_elements(cls, elements) -> JordanVector:
        elements = list(elements)
        if not elements:
            raise ShapeError("need at least one element")
        shape = elements[0].shape
        for e in elements[1:]:
            if e.shape != shape:
                raise ShapeError("all columns must share one shape")
        return cls(shape, np.column_stack([e.coords for e in elements]))

    @property
    def n_columns(self) -> int:
        return self.data.shape[1]

    def __len__(self):
        return self.n_columns

    def __getitem__(self, i: int) -> JordanElement:
        return JordanElement(self.shape, self.data[:, i])

    def __iter__(self):
        return (self[i] for i in range(self.n_columns))

    def _check(self, other: JordanVector):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape!r} vs {other.shape!r}")
        if self.n_columns != other.n_columns:
            raise ShapeError(
                f"column count mismatch: {self.n_columns} vs {other.n_columns}"
            )

    def __add__(self, other):
        if isinstance(other, JordanVector):
            self._check(other)
            return JordanVector(self.shape, self.data + other.data)
        if isinstance(other, (int, float)):
            return JordanVector(self.shape, self.data + float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, JordanVector):
            self._check(other)
            return JordanVector(self.shape, self.data - other.data)
        if isinstance(other, (int, float)):
            return JordanVector(self.shape, self.data - float(other))
        return NotImplemented

    def __neg__(self):
        return JordanVector(self.shape, -self.data)

    def __mul__(self, other):
        if isinstance(other, JordanVector):
            self._check(other)
            return JordanVector.from_elements(
                [x * y for x, y in zip(self, other)]
            )
        if isinstance(other, (int, float)):
            return JordanVector(self.shape, self.data * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return JordanVector(self.shape, self.data * float(other))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, JordanVector):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.shape, self.data.shape, self.data.tobytes()))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.data)))

    def __repr__(self):
        return f"JordanVector({self.shape!r}, n_columns={self.n_columns})"

    def __str__(self):
        from .formatting import format_vector

        return format_vector(self)


# ---------------------------------------------------------------------------
# operations


def add(x: JordanElement, y: JordanElement) -> JordanElement:
    """Coordinatewise sum (linearity makes this the dense-matrix sum too)."""
    return x + y


def subtract(x: JordanElement, y: JordanElement) -> JordanElement:
    return x - y


def negate(x: JordanElement) -> JordanElement:
    return -x


def scalar_multiply(alpha: float, x: JordanElement) -> JordanElement:
    return x * float(alpha)


def scalar_add(x: JordanElement, alpha: float) -> JordanElement:
    """Add alpha to EVERY packed coordinate (matrix + scalar analogy)."""
    return x + float(alpha)


def add_unit_multiple(x: JordanElement, alpha: float) -> JordanElement:
    """The algebraically natural alternative to scalar_add: x + alpha * unit."""
    return x + unit_element(x.shape) * float(alpha)


def equal_approx(x: JordanElement, y: JordanElement, tol: float) -> bool:
    """True when the max-abs coordinate difference is <= tol."""
    if x.shape != y.shape:
        raise ShapeError(f"shape mismatch: {x.shape!r} vs {y.shape!r}")
    return float(np.max(np.abs(x.coords - y.coords))) <= tol


def zero_element(shape: AlgebraShape) -> JordanElement:
    return JordanElement(shape, np.zeros(shape.packed_length))


def unit_element(shape: AlgebraShape) -> JordanElement:
    """The Jordan unit: the identity matrix, or (1, 0) for spin factors."""
    if shape.kind == "spin":
        coords = np.zeros(shape.packed_length)
        coords[0] = 1.0
        return JordanElement(shape, coords)
    d, w = shape.d, shape.entry_width
    dense = np.zeros((d, d, w))
    dense[np.arange(d), np.arange(d), 0] = 1.0
    return JordanElement(shape, _pack(shape, dense))


def to_dense(x: JordanElement) -> DenseMatrix:
    """Coerce a matrix-kind element to its Hermitian dense form."""
    if not x.shape.is_matrix:
        raise UnsupportedKindError("spin elements have no dense matrix form")
    return DenseMatrix(_unpack(x.shape, x.coords))


def from_dense(m, shape: AlgebraShape, tol: float = 1e-12) -> JordanElement:
    """Pack a Hermitian dense matrix, symmetrizing as (M + M^H)/2 first.

    Raises ValidationError when the matrix is non-Hermitian beyond ``tol``
    or a diagonal entry has imaginary parts beyond ``tol``.
    """
    if not shape.is_matrix:
        raise UnsupportedKindError("spin elements have no dense matrix form")
    if not isinstance(m, DenseMatrix):
        m = DenseMatrix(m)
    if m.d != shape.d or m.width != shape.entry_width:
        raise ShapeError(
            f"dense array ({m.d}x{m.d}, width {m.width}) does not fit {shape!r}"
        )
    defect = m.hermitian_defect()
    if defect > 2.0 * tol:
        # entry[i][j] vs conj(entry[j][i]) differ by up to twice the per-entry tol
        raise ValidationError(f"matrix is not Hermitian: max defect {defect:g}")
    diag_imag = m.diagonal_imag_max()
    if diag_imag > tol:
        raise ValidationError(f"diagonal entries not real: max imag {diag_imag:g}")
    symmetrized = 0.5 * (m.array + _conj_transpose(m.array))
    return JordanElement(shape, _pack(shape, symmetrized))
