"""Composition algebra arithmetic: tables vs recursive route, identities."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanalg._kernels import BASIS_LABELS, WIDTHS, mul_table, structure_tensor
from jordanalg.composition import (
    CompositionNumber,
    cd_add,
    cd_conjugate,
    cd_multiply,
    cd_norm,
    cd_scale,
)
from jordanalg.errors import ShapeError


def rand_cn(rng, width):
    return CompositionNumber(rng.normal(size=width))


def test_widths_are_real_complex_quaternion_octonion():
    assert WIDTHS == (1, 2, 4, 8)


def test_basis_labels_match_octonion_display():
    assert BASIS_LABELS[8] == ("Re", "i", "j", "k", "l", "il", "jl", "kl")
    assert BASIS_LABELS[4] == ("Re", "i", "j", "k")


def test_mul_table_agrees_with_recursive_multiply():
    # two independent routes: basis-index recursion vs coefficient recursion
    for w in WIDTHS:
        idx, sgn = mul_table(w)
        for a in range(w):
            for b in range(w):
                prod = CompositionNumber.basis(w, a) * CompositionNumber.basis(w, b)
                expected = np.zeros(w)
                expected[idx[a, b]] = sgn[a, b]
                assert np.array_equal(prod.coeffs, expected), (w, a, b)


def test_structure_tensor_matches_table():
    for w in WIDTHS:
        idx, sgn = mul_table(w)
        tensor = structure_tensor(w)
        for a in range(w):
            for b in range(w):
                expected = np.zeros(w)
                expected[idx[a, b]] = sgn[a, b]
                assert np.array_equal(tensor[a, b], expected)


def test_quaternion_hamilton_relations():
    i = CompositionNumber.basis(4, 1)
    j = CompositionNumber.basis(4, 2)
    k = CompositionNumber.basis(4, 3)
    minus_one = -CompositionNumber.one(4)
    assert i * j == k
    assert j * i == -k
    assert i * i == minus_one
    assert j * j == minus_one
    assert k * k == minus_one
    assert i * j * k == minus_one


def test_octonion_doubling_products():
    e = [CompositionNumber.basis(8, t) for t in range(8)]
    i, j, k, l, il, jl, kl = e[1], e[2], e[3], e[4], e[5], e[6], e[7]
    assert i * j == k
    assert i * l == il
    assert l * i == -il
    assert j * l == jl
    assert k * l == kl


def test_octonion_nonassociative_witness_exact():
    i = CompositionNumber.basis(8, 1)
    j = CompositionNumber.basis(8, 2)
    l = CompositionNumber.basis(8, 4)
    kl = CompositionNumber.basis(8, 7)
    assert (i * j) * l == kl
    assert i * (j * l) == -kl
    assert (i * j) * l != i * (j * l)


def test_quaternion_associativity_small(rng):
    worst = 0.0
    for _ in range(200):
        p, q, r = (rand_cn(rng, 4) for _ in range(3))
        res = (p * q) * r - p * (q * r)
        worst = max(worst, float(np.max(np.abs(res.coeffs))))
    assert worst <= 1e-13


def test_octonion_alternativity(rng):
    worst = 0.0
    for _ in range(200):
        x, y = rand_cn(rng, 8), rand_cn(rng, 8)
        left = (x * x) * y - x * (x * y)
        right = (y * x) * x - y * (x * x)
        worst = max(worst, float(np.max(np.abs(left.coeffs))))
        worst = max(worst, float(np.max(np.abs(right.coeffs))))
    assert worst <= 1e-12


def test_norm_composition_relative(rng):
    for w in WIDTHS:
        for _ in range(100):
            x, y = rand_cn(rng, w), rand_cn(rng, w)
            lhs = (x * y).norm()
            rhs = x.norm() * y.norm()
            assert abs(lhs - rhs) <= 1e-12 * max(rhs, 1e-300)


def test_norm_three_four_five():
    x = CompositionNumber([0.0, 3.0, 4.0, 0.0])
    assert x.norm() == 5.0


def test_conjugation_properties(rng):
    for w in WIDTHS:
        x, y = rand_cn(rng, w), rand_cn(rng, w)
        assert x.conjugate().conjugate() == x
        # conj(xy) = conj(y) conj(x)
        res = (x * y).conjugate() - y.conjugate() * x.conjugate()
        assert float(np.max(np.abs(res.coeffs))) <= 1e-13
        # x conj(x) is the squared norm, pure real
        sq = x * x.conjugate()
        assert abs(sq.real - float(x.coeffs @ x.coeffs)) <= 1e-13
        if w > 1:
            assert float(np.max(np.abs(sq.coeffs[1:]))) <= 1e-13


def test_real_center_commutes(rng):
    for w in WIDTHS:
        x = rand_cn(rng, w)
        r = CompositionNumber.one(w) * 2.5
        assert np.allclose((r * x).coeffs, (x * r).coeffs, rtol=0, atol=0)


def test_width_mismatch_raises(rng):
    with pytest.raises(ShapeError):
        rand_cn(rng, 4) * rand_cn(rng, 8)


def test_function_wrappers(rng):
    x, y = rand_cn(rng, 8), rand_cn(rng, 8)
    assert cd_multiply(x, y) == x * y
    assert cd_add(x, y) == x + y
    assert cd_conjugate(x) == x.conjugate()
    assert cd_scale(3.0, x) == x * 3.0
    assert cd_norm(x) == x.norm()


def test_one_is_identity(rng):
    for w in WIDTHS:
        x = rand_cn(rng, w)
        assert CompositionNumber.one(w) * x == x
        assert x * CompositionNumber.one(w) == x


@settings(max_examples=50, deadline=None)
@given(
    st.integers(0, 7),
    st.integers(0, 7),
    st.floats(-10, 10, allow_nan=False),
    st.floats(-10, 10, allow_nan=False),
)
def test_bilinearity_on_scaled_basis(a, b, s, t):
    ea, eb = CompositionNumber.basis(8, a), CompositionNumber.basis(8, b)
    lhs = (ea * s) * (eb * t)
    rhs = (ea * eb) * (s * t)
    assert np.allclose(lhs.coeffs, rhs.coeffs, rtol=0, atol=1e-12 * (abs(s * t) + 1))
