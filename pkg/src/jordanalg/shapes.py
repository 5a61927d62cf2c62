"""Algebra shape descriptors.

A shape fixes the algebra kind, its dimension parameter, and (for spin
factors) the inner-product weights; together these determine the packed
coordinate length and the product rule.

Kinds and packed lengths:

    rsm     real symmetric d x d            d(d+1)/2
    chm     complex Hermitian d x d         d^2
    qhm     quaternionic Hermitian d x d    d + 4 d(d-1)/2
    albert  octonionic Hermitian 3 x 3      27
    oherm   octonionic Hermitian d x d      d + 8 d(d-1)/2   (a Jordan
            algebra only for d <= 3; included for the d >= 4 negative
            checks)
    spin    R + R^n spin factor             n + 1
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeError, UnsupportedKindError

MATRIX_KINDS = ("rsm", "chm", "qhm", "albert", "oherm")
ALL_KINDS = MATRIX_KINDS + ("spin",)

ENTRY_WIDTH = {"rsm": 1, "chm": 2, "qhm": 4, "albert": 8, "oherm": 8}

KIND_DISPLAY = {
    "rsm": "real symmetric matrices",
    "chm": "complex Hermitian matrices",
    "qhm": "quaternionic Hermitian matrices",
    "albert": "Albert matrices",
    "oherm": "octonionic Hermitian matrices",
    "spin": "spin objects",
}


@dataclass(frozen=True)
class AlgebraShape:
    """Immutable descriptor of one Jordan algebra."""

    kind: str
    d: int | None = None
    n: int | None = None
    ip_weights: tuple[float, ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in ALL_KINDS:
            raise ShapeError(f"unknown kind {self.kind!r}; expected one of {ALL_KINDS}")
        if self.kind == "spin":
            if self.d is not None:
                raise ShapeError("spin shapes take n, not d")
            if self.n is None or self.n < 1:
                raise ShapeError("spin shapes need n >= 1")
            weights = self.ip_weights
            if weights is None:
                weights = (1.0,) * self.n
            weights = tuple(float(w) for w in weights)
            if len(weights) != self.n:
                raise ShapeError(
                    f"need {self.n} inner-product weights, got {len(weights)}"
                )
            if any(w <= 0.0 for w in weights):
                raise ShapeError("inner-product weights must be strictly positive")
            object.__setattr__(self, "ip_weights", weights)
        else:
            if self.n is not None:
                raise ShapeError("matrix shapes take d, not n")
            if self.ip_weights is not None:
                raise ShapeError("ip_weights apply to spin factors only")
            if self.kind == "albert":
                if self.d is None:
                    object.__setattr__(self, "d", 3)
                elif self.d != 3:
                    raise ShapeError("albert is fixed at d=3; use oherm for other d")
            if self.d is None or self.d < 1:
                raise ShapeError("matrix shapes need d >= 1")

    @property
    def is_matrix(self) -> bool:
        return self.kind in MATRIX_KINDS

    @property
    def entry_width(self) -> int:
        """Coefficient count of one matrix entry (1, 2, 4, or 8)."""
        if not self.is_matrix:
            raise UnsupportedKindError("spin factors have no matrix entries")
        return ENTRY_WIDTH[self.kind]

    @property
    def packed_length(self) -> int:
        d, n = self.d, self.n
        if self.kind == "rsm":
            return d * (d + 1) // 2
        if self.kind == "spin":
            return n + 1
        # diagonal reals + one entry-width block per strict lower entry
        return d + self.entry_width * d * (d - 1) // 2

    def display_name(self) -> str:
        return KIND_DISPLAY[self.kind]

    def __repr__(self):
        if self.kind == "spin":
            if all(w == 1.0 for w in self.ip_weights):
                return f"AlgebraShape(spin, n={self.n})"
            return f"AlgebraShape(spin, n={self.n}, weights={self.ip_weights})"
        return f"AlgebraShape({self.kind}, d={self.d})"


def rsm_shape(d: int = 5) -> AlgebraShape:
    """Real symmetric d x d matrices."""
    return AlgebraShape("rsm", d=d)


def chm_shape(d: int = 5) -> AlgebraShape:
    """Complex Hermitian d x d matrices."""
    return AlgebraShape("chm", d=d)


def qhm_shape(d: int = 5) -> AlgebraShape:
    """Quaternionic Hermitian d x d matrices."""
    return AlgebraShape("qhm", d=d)


def albert_shape() -> AlgebraShape:
    """Octonionic Hermitian 3 x 3 matrices (the exceptional Jordan algebra)."""
    return AlgebraShape("albert", d=3)


def oherm_shape(d: int) -> AlgebraShape:
    """Octonionic Hermitian d x d matrices, any d (not Jordan for d >= 4)."""
    return AlgebraShape("oherm", d=d)


def spin_shape(n: int = 5, weights=None) -> AlgebraShape:
    """Spin factor on R + R^n with optional positive inner-product weights."""
    if weights is not None:
        weights = tuple(float(w) for w in weights)
    return AlgebraShape("spin", n=n, ip_weights=weights)
