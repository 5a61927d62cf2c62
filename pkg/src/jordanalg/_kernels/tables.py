"""Multiplication tables for the composition algebras R, C, H, O.

The tables are built by a basis-index recursion over the Cayley-Dickson
doubling (p, q)(r, s) = (pr - conj(s) q, sp + q conj(r)).  Writing a
width-2w basis element as either (e_a, 0) or (0, e_m), the product of two
basis elements is always +/- a single basis element, so the whole algebra
is captured by two small integer tables:

    e_p e_q = SGN[p, q] * e_IDX[p, q]

This derivation is deliberately index-level; the coefficient-level
recursive multiply in ``jordanalg.composition`` is an independent route,
and the two are cross-checked in the test suite.
"""

from functools import lru_cache

import numpy as np

WIDTHS = (1, 2, 4, 8)

# Coefficient labels, octonion order matching the Albert packed display.
BASIS_LABELS = {
    1: ("Re",),
    2: ("Re", "i"),
    4: ("Re", "i", "j", "k"),
    8: ("Re", "i", "j", "k", "l", "il", "jl", "kl"),
}


@lru_cache(maxsize=None)
def mul_table(width: int):
    """Return ``(idx, sgn)`` int8 arrays with e_p e_q = sgn[p,q] * e_idx[p,q]."""
    if width not in WIDTHS:
        raise ValueError(f"width must be one of {WIDTHS}, got {width}")
    if width == 1:
        return (np.zeros((1, 1), dtype=np.int8), np.ones((1, 1), dtype=np.int8))
    h = width // 2
    idx, sgn = mul_table(h)
    big_idx = np.zeros((width, width), dtype=np.int8)
    big_sgn = np.zeros((width, width), dtype=np.int8)
    for a in range(width):
        for b in range(width):
            if a < h and b < h:
                # (p, 0)(r, 0) = (pr, 0)
                big_idx[a, b] = idx[a, b]
                big_sgn[a, b] = sgn[a, b]
            elif a < h:
                # (p, 0)(0, e_n) = (0, e_n p)
                n = b - h
                big_idx[a, b] = h + idx[n, a]
                big_sgn[a, b] = sgn[n, a]
            elif b < h:
                # (0, e_m)(r, 0) = (0, e_m conj(r))
                m = a - h
                big_idx[a, b] = h + idx[m, b]
                big_sgn[a, b] = sgn[m, b] * (1 if b == 0 else -1)
            else:
                # (0, e_m)(0, e_n) = (-conj(e_n) e_m, 0)
                m, n = a - h, b - h
                big_idx[a, b] = idx[n, m]
                big_sgn[a, b] = -sgn[n, m] * (1 if n == 0 else -1)
    big_idx.flags.writeable = False
    big_sgn.flags.writeable = False
    return big_idx, big_sgn


@lru_cache(maxsize=None)
def structure_tensor(width: int):
    """Dense tensor T with (ab)[r] = sum_{p,q} T[p,q,r] a[p] b[q]."""
    idx, sgn = mul_table(width)
    tensor = np.zeros((width, width, width))
    for p in range(width):
        for q in range(width):
            tensor[p, q, idx[p, q]] = sgn[p, q]
    tensor.flags.writeable = False
    return tensor
