# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled kernel: table-driven composition-algebra matrix multiply.

Accumulation order is (k, p, q) ascending per output entry, matching the
pure backend's per-k updates for width-1 entries bit for bit.
"""

import numpy as np

cimport numpy as cnp

from .tables import mul_table

cnp.import_array()

cdef dict _TABLE_CACHE = {}


cdef tuple _tables(int width):
    cached = _TABLE_CACHE.get(width)
    if cached is None:
        idx, sgn = mul_table(width)
        cached = (
            np.array(idx, dtype=np.int8, order="C"),
            np.array(sgn, dtype=np.float64, order="C"),
        )
        _TABLE_CACHE[width] = cached
    return cached


def comp_matmul(object a_in, object b_in):
    """Matrix product of (d, d, w) arrays with composition-algebra entries."""
    a = np.ascontiguousarray(a_in, dtype=np.float64)
    b = np.ascontiguousarray(b_in, dtype=np.float64)
    cdef const cnp.float64_t[:, :, ::1] av = a
    cdef const cnp.float64_t[:, :, ::1] bv = b
    cdef Py_ssize_t d = av.shape[0]
    cdef int w = <int> av.shape[2]
    idx_arr, sgn_arr = _tables(w)
    cdef const cnp.int8_t[:, ::1] idx = idx_arr
    cdef const cnp.float64_t[:, ::1] sgn = sgn_arr
    cdef cnp.ndarray[cnp.float64_t, ndim=3] out = np.zeros((d, d, w), dtype=np.float64)
    cdef cnp.float64_t[:, :, ::1] cv = out
    cdef Py_ssize_t i, j, k
    cdef int p, q
    cdef double coeff
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for p in range(w):
                    coeff = av[i, k, p]
                    if coeff == 0.0:
                        continue
                    for q in range(w):
                        cv[i, j, idx[p, q]] += sgn[p, q] * coeff * bv[k, j, q]
    return out
