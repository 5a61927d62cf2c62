"""Jordan product behavior and its dense-matrix oracles."""

import numpy as np
import pytest

from jordanalg.elements import JordanElement, unit_element, zero_element
from jordanalg.errors import ShapeError, UnsupportedKindError
from jordanalg.product import (
    dense_oracle_check,
    jordan_product,
    symmetry_preservation_check,
)
from jordanalg.random_gen import GenConfig, trial_elements
from jordanalg.shapes import qhm_shape, rsm_shape, spin_shape

from conftest import FIVE_KINDS, MATRIX_SHAPES, draw_triple


def test_rsm_two_by_two_known_product():
    shape = rsm_shape(2)
    x = JordanElement(shape, [1.0, 2.0, 3.0])  # [[1,2],[2,3]]
    y = JordanElement(shape, [0.0, 1.0, 0.0])  # [[0,1],[1,0]]
    assert np.array_equal(jordan_product(x, y).coords, [2.0, 2.0, 2.0])


def test_spin_known_product_unit_weights():
    shape = spin_shape(2)
    x = JordanElement(shape, [1.0, 1.0, 0.0])
    y = JordanElement(shape, [2.0, 0.0, 1.0])
    assert np.array_equal(jordan_product(x, y).coords, [2.0, 2.0, 1.0])


def test_spin_weighted_inner_product():
    shape = spin_shape(2, weights=(2.0, 0.5))
    x = JordanElement(shape, [0.0, 1.0, 2.0])
    y = JordanElement(shape, [0.0, 3.0, 4.0])
    # scalar part: 2*1*3 + 0.5*2*4 = 10
    assert np.array_equal(jordan_product(x, y).coords, [10.0, 0.0, 0.0])


@pytest.mark.parametrize("shape", FIVE_KINDS, ids=lambda s: s.kind)
def test_commutativity_is_exact(shape):
    for trial in range(20):
        x, y, _ = draw_triple(shape, seed=1, trial=trial)
        assert np.array_equal((x * y).coords, (y * x).coords)


@pytest.mark.parametrize("shape", FIVE_KINDS, ids=lambda s: s.kind)
def test_unit_is_identity(shape):
    u = unit_element(shape)
    for trial in range(10):
        x, _, _ = draw_triple(shape, seed=2, trial=trial)
        assert (u * x - x).max_abs() <= 1e-13
        assert (x * u - x).max_abs() <= 1e-13


@pytest.mark.parametrize("shape", FIVE_KINDS, ids=lambda s: s.kind)
def test_distributivity(shape):
    for trial in range(10):
        x, y, z = draw_triple(shape, seed=3, trial=trial)
        res = x * (y + z) - (x * y + x * z)
        assert res.max_abs() <= 1e-12


@pytest.mark.parametrize("shape", FIVE_KINDS, ids=lambda s: s.kind)
def test_bilinearity(shape):
    for trial in range(5):
        x, y, _ = draw_triple(shape, seed=4, trial=trial)
        scale = max(1.0, x.max_abs() * y.max_abs())
        res = (x * 3.5) * y - (x * y) * 3.5
        assert res.max_abs() <= 1e-12 * 3.5 * scale


def test_zero_annihilates():
    for shape in FIVE_KINDS:
        x, _, _ = draw_triple(shape)
        z = zero_element(shape)
        assert (x * z).max_abs() == 0.0


@pytest.mark.parametrize("shape", MATRIX_SHAPES, ids=lambda s: s.kind)
def test_dense_oracle(shape):
    expected = 0.0 if shape.kind == "rsm" else 1e-13
    for trial in range(10):
        x, y, _ = draw_triple(shape, seed=5, trial=trial)
        report = dense_oracle_check(x, y)
        assert report.max_abs <= expected


def test_dense_oracle_identity_pair_exact():
    for shape in MATRIX_SHAPES:
        u = unit_element(shape)
        assert dense_oracle_check(u, u).max_abs == 0.0


@pytest.mark.parametrize("shape", MATRIX_SHAPES, ids=lambda s: s.kind)
def test_symmetry_preservation(shape):
    expected = 0.0 if shape.kind == "rsm" else 1e-13
    for trial in range(10):
        x, y, _ = draw_triple(shape, seed=6, trial=trial)
        assert symmetry_preservation_check(x, y).max_abs <= expected
        assert symmetry_preservation_check(x, x).max_abs <= expected


def test_spin_rejects_matrix_checks():
    x, y, _ = draw_triple(spin_shape(5))
    with pytest.raises(UnsupportedKindError):
        dense_oracle_check(x, y)
    with pytest.raises(UnsupportedKindError):
        symmetry_preservation_check(x, y)


def test_product_shape_mismatch():
    x = zero_element(rsm_shape(2))
    y = zero_element(qhm_shape(2))
    with pytest.raises(ShapeError):
        jordan_product(x, y)


def test_weighted_spin_commutes_exactly():
    shape = spin_shape(4, weights=(0.5, 1.5, 2.0, 3.0))
    cfg = GenConfig(seed=9, n_columns=2, spin_n=4)
    for trial in range(20):
        v = trial_elements(shape, cfg, trial)
        x, y = v[0], v[1]
        assert np.array_equal((x * y).coords, (y * x).coords)


def test_weighted_spin_jordan_identity():
    shape = spin_shape(4, weights=(0.5, 1.5, 2.0, 3.0))
    cfg = GenConfig(seed=10, n_columns=2, spin_n=4)
    for trial in range(20):
        v = trial_elements(shape, cfg, trial)
        x, y = v[0], v[1]
        xx = x * x
        res = (x * y) * xx - x * (y * xx)
        assert res.max_abs() <= 1e-12
