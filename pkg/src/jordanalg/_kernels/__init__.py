"""Kernel backend selection.

Two interchangeable implementations of the hot dense-product kernel:

* ``compiled`` -- Cython extension, used when the build produced it;
* ``pure`` -- numpy fallback, always available.

Set ``JORDANALG_PURE=1`` in the environment to force the fallback.
``use_backend`` exists so the benchmark can time both in one process.
"""

import os

from . import pure
from .tables import BASIS_LABELS, WIDTHS, mul_table, structure_tensor

_BACKENDS = {"pure": pure}

try:
    from . import _speedups
except ImportError:
    _speedups = None
else:
    _BACKENDS["compiled"] = _speedups

if os.environ.get("JORDANALG_PURE"):
    _active = "pure"
else:
    _active = "compiled" if _speedups is not None else "pure"


def backend_name():
    """Name of the backend currently serving ``comp_matmul``."""
    return _active


def available_backends():
    """Backend names usable with ``use_backend``, compiled first if built."""
    return tuple(sorted(_BACKENDS))


def use_backend(name):
    """Switch the active backend (intended for benchmarks and tests)."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; have {sorted(_BACKENDS)}")
    _active = name


def comp_matmul(a, b):
    """Matrix product of (d, d, w) arrays with composition-algebra entries."""
    return _BACKENDS[_active].comp_matmul(a, b)
