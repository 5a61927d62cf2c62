"""Backend parity: the compiled kernel must agree with the pure one."""

import subprocess
import sys

import numpy as np
import pytest

from jordanalg import _kernels
from jordanalg._kernels import pure
from jordanalg.composition import CompositionNumber
from jordanalg.elements import to_dense
from jordanalg.random_gen import GenConfig, random_elements
from jordanalg.shapes import albert_shape, chm_shape, oherm_shape, qhm_shape, rsm_shape

HAS_COMPILED = "compiled" in _kernels.available_backends()

needs_compiled = pytest.mark.skipif(
    not HAS_COMPILED, reason="compiled extension not built"
)


@pytest.fixture
def restore_backend():
    before = _kernels.backend_name()
    yield
    _kernels.use_backend(before)


def _dense_pair(shape, seed):
    kwargs = {"d": shape.d}
    v = random_elements(shape, GenConfig(seed=seed, n_columns=2, **kwargs))
    return to_dense(v[0]).array, to_dense(v[1]).array


def test_backend_registry():
    names = _kernels.available_backends()
    assert "pure" in names
    assert _kernels.backend_name() in names


def test_use_backend_rejects_unknown(restore_backend):
    with pytest.raises(ValueError):
        _kernels.use_backend("vectorized")


@needs_compiled
def test_parity_exact_at_width_one(restore_backend):
    a, b = _dense_pair(rsm_shape(6), seed=3)
    _kernels.use_backend("pure")
    p = _kernels.comp_matmul(a, b)
    _kernels.use_backend("compiled")
    c = _kernels.comp_matmul(a, b)
    assert np.array_equal(p, c)


@needs_compiled
@pytest.mark.parametrize(
    "shape",
    [chm_shape(5), qhm_shape(5), albert_shape(), oherm_shape(4)],
    ids=lambda s: s.kind,
)
def test_parity_wide_entries(shape, restore_backend):
    worst = 0.0
    for seed in range(5):
        a, b = _dense_pair(shape, seed)
        _kernels.use_backend("pure")
        p = _kernels.comp_matmul(a, b)
        _kernels.use_backend("compiled")
        c = _kernels.comp_matmul(a, b)
        worst = max(worst, float(np.max(np.abs(p - c))))
    assert worst <= 1e-13


@needs_compiled
def test_compiled_accepts_read_only_input(restore_backend):
    a, b = _dense_pair(qhm_shape(3), seed=0)
    a.flags.writeable = False
    b.flags.writeable = False
    _kernels.use_backend("compiled")
    _kernels.comp_matmul(a, b)


def test_kernel_matches_elementwise_composition_multiply():
    # 2x2 quaternionic entries, product recomputed entry by entry
    rng = np.random.default_rng(7)
    a = rng.standard_normal((2, 2, 4))
    b = rng.standard_normal((2, 2, 4))
    got = pure.comp_matmul(a, b)
    for i in range(2):
        for j in range(2):
            acc = CompositionNumber.zero(4)
            for k in range(2):
                acc = acc + CompositionNumber(a[i, k]) * CompositionNumber(b[k, j])
            assert np.max(np.abs(got[i, j] - acc.coeffs)) <= 1e-13


def test_pure_kernel_width_one_is_plain_matmul():
    rng = np.random.default_rng(11)
    a = rng.standard_normal((4, 4, 1))
    b = rng.standard_normal((4, 4, 1))
    got = pure.comp_matmul(a, b)[:, :, 0]
    assert np.max(np.abs(got - a[:, :, 0] @ b[:, :, 0])) <= 1e-13


def test_pure_env_forces_fallback():
    code = (
        "from jordanalg import _kernels; "
        "print(_kernels.backend_name())"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "JORDANALG_PURE": "1"},
        check=True,
    )
    assert out.stdout.strip() == "pure"


def test_mul_table_widths_only():
    with pytest.raises(Exception):
        _kernels.mul_table(3)
