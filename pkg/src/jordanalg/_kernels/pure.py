"""Numpy fallback kernel.

``comp_matmul`` accumulates the inner-product index k in ascending order
with one update per k so that, for width-1 (real) entries, the result is
bit-identical to a naive ascending-k triple loop.  Do not replace the
k-loop with a single einsum over all indices: that loses the fixed
summation order the exactness tests rely on.
"""

import numpy as np

from .tables import structure_tensor


def comp_matmul(a, b):
    """Matrix product of (d, d, w) arrays with composition-algebra entries."""
    d = a.shape[0]
    tensor = structure_tensor(a.shape[2])
    out = np.zeros_like(a)
    for k in range(d):
        out += np.einsum("ip,jq,pqr->ijr", a[:, k, :], b[k, :, :], tensor)
    return out
