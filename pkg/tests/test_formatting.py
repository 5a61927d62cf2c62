"""Console rendering: labels, column styles, truncation, dense layouts."""

import numpy as np

from jordanalg.elements import JordanVector, to_dense
from jordanalg.formatting import _column_strings, format_dense, format_vector, row_labels
from jordanalg.shapes import (
    albert_shape,
    chm_shape,
    oherm_shape,
    qhm_shape,
    rsm_shape,
    spin_shape,
)


def test_row_labels_rsm():
    assert row_labels(rsm_shape(2)) == ["[1,]", "[2,]", "[3,]"]


def test_row_labels_spin():
    assert row_labels(spin_shape(3)) == [" r", "[1]", "[2]", "[3]"]


def test_row_labels_chm():
    assert row_labels(chm_shape(3)) == [
        "d1",
        "d2",
        "d3",
        "Re(o1)",
        "i(o1)",
        "Re(o2)",
        "i(o2)",
        "Re(o3)",
        "i(o3)",
    ]


def test_row_labels_qhm_first_entry():
    labels = row_labels(qhm_shape(2))
    assert labels == ["d1", "d2", "Re(o1)", "i(o1)", "j(o1)", "k(o1)"]


def test_row_labels_albert_count_and_tail():
    labels = row_labels(albert_shape())
    assert len(labels) == 27
    assert labels[:3] == ["d1", "d2", "d3"]
    assert labels[3] == "Re(o1)"
    assert labels[-1] == "kl(o3)"


def test_row_labels_oherm_entries():
    labels = row_labels(oherm_shape(4))
    assert len(labels) == 52
    # strict-lower entries in column-major order: (2,1),(3,1),(4,1),(3,2),...
    assert labels[4] == "Re(o1)"
    assert labels[12] == "Re(o2)"


def test_format_vector_rsm_exact():
    v = JordanVector(rsm_shape(2), np.array([[1.0, 4.0], [2.0, 5.0], [3.0, 6.0]]))
    assert format_vector(v) == (
        "Vector of real symmetric matrices with entries\n"
        "     [1] [2] \n"
        "[1,]   1   4 \n"
        "[2,]   2   5 \n"
        "[3,]   3   6 "
    )


def test_format_vector_spin_left_justified():
    s = JordanVector(spin_shape(2), np.array([[1.5], [0.25], [-0.5]]))
    assert format_vector(s) == (
        "Vector of spin objects with entries\n"
        "      [1] \n"
        " r   1.50 \n"
        "[1]  0.25 \n"
        "[2] -0.50 "
    )


def test_albert_has_no_trailing_space():
    v = JordanVector(albert_shape(), np.zeros((27, 1)))
    lines = format_vector(v).splitlines()
    assert all(not line.endswith(" ") for line in lines[1:])
    assert lines[0] == "Vector of Albert matrices with entries"


def test_matrix_kinds_have_trailing_space():
    for shape in (rsm_shape(2), chm_shape(2), qhm_shape(2), spin_shape(2)):
        v = JordanVector(shape, np.zeros((shape.packed_length, 1)))
        lines = format_vector(v).splitlines()
        assert all(line.endswith(" ") for line in lines[1:])


def test_column_fixed_common_decimals():
    assert _column_strings([1.0, 2.5, -0.125]) == ["1.000", "2.500", "-0.125"]
    assert _column_strings([1.0, 2.0]) == ["1", "2"]


def test_column_negative_zero_normalized():
    assert _column_strings([-0.0, 1.0]) == ["0", "1"]


def test_column_scientific_when_any_entry_needs_it():
    col = _column_strings([1.0, 1e-9])
    assert col == ["1.000000e+00", "1.000000e-09"]
    col2 = _column_strings([12345678.9, 1.0])
    assert all("e" in s for s in col2)


def test_columns_styled_independently():
    v = JordanVector(
        rsm_shape(2), np.array([[1.0, 1e-9], [2.0, 2e-9], [3.0, 3e-9]])
    )
    lines = format_vector(v).splitlines()
    assert "1.000000e-09" in lines[2]
    # first column stays fixed despite the second being scientific
    assert lines[2].split()[1] == "1"


def test_truncation_keeps_five_each_side():
    big = JordanVector(rsm_shape(6), np.arange(21.0).reshape(21, 1))
    lines = format_vector(big, max_rows=10).splitlines()
    # header text + column header + 5 + dots + 5
    assert len(lines) == 13
    assert set(lines[7].rstrip()) == {"."}
    assert lines[6].strip().startswith("[5,]")
    assert lines[8].strip().startswith("[17,]")


def test_truncation_not_applied_when_small():
    v = JordanVector(rsm_shape(2), np.zeros((3, 1)))
    assert format_vector(v, max_rows=2) == format_vector(v)


def test_no_truncation_without_max_rows():
    big = JordanVector(rsm_shape(6), np.arange(21.0).reshape(21, 1))
    assert len(format_vector(big).splitlines()) == 23


def test_format_dense_real_grid():
    v = JordanVector(rsm_shape(2), np.array([[1.0], [2.0], [4.0]]))
    assert format_dense(to_dense(v[0])) == (
        "     [,1] [,2]\n"
        "[1,]    1    2\n"
        "[2,]    2    4"
    )


def test_format_dense_wide_entry_layout():
    v = JordanVector(chm_shape(2), np.array([[1.0], [2.0], [0.5], [-0.5]]))
    out = format_dense(to_dense(v[0]))
    assert out == (
        "   [1,1] [2,1] [1,2] [2,2]\n"
        "Re     1   0.5   0.5     2\n"
        "i      0  -0.5   0.5     0\n"
        "     [,1] [,2]\n"
        "[1,]    1    3\n"
        "[2,]    2    4"
    )


def test_format_dense_albert_headers():
    v = JordanVector(albert_shape(), np.zeros((27, 1)))
    out = format_dense(to_dense(v[0]))
    lines = out.splitlines()
    assert lines[0].split() == [f"[{i},{j}]" for j in (1, 2, 3) for i in (1, 2, 3)]
    assert [line.split()[0] for line in lines[1:9]] == [
        "Re", "i", "j", "k", "l", "il", "jl", "kl",
    ]
