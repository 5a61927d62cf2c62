"""Console rendering of element vectors and dense matrices.

The layout mirrors familiar numeric-matrix printing: a header naming the
algebra, one labelled row per packed coordinate, one column per element,
and an optional dotted line standing in for elided rows.  None of this is
a stability contract; parse/render round-trips live in serialization.
"""

from __future__ import annotations

import numpy as np

from ._kernels import BASIS_LABELS
from .shapes import AlgebraShape

__all__ = [
    "format_dense",
    "format_vector",
    "row_labels",
]


def row_labels(shape: AlgebraShape) -> list:
    """Display label for each packed coordinate, in packed order."""
    if shape.kind == "spin":
        return [" r"] + [f"[{k}]" for k in range(1, shape.n + 1)]
    if shape.kind == "rsm":
        return [f"[{k},]" for k in range(1, shape.packed_length + 1)]
    if shape.kind in ("chm", "qhm", "albert", "oherm"):
        d = shape.d
        labels = [f"d{i}" for i in range(1, d + 1)]
        basis = BASIS_LABELS[shape.entry_width]
        entry = 0
        for j in range(d):
            for _i in range(j + 1, d):
                entry += 1
                labels.extend(f"{b}(o{entry})" for b in basis)
        return labels
    raise AssertionError(shape.kind)


def _column_strings(vals) -> list:
    """Format one column with a common style, minimal common decimals.

    Fixed notation with up to 7 significant digits when every entry allows
    it, otherwise scientific with 6 decimals for the whole column.
    """
    vals = [0.0 if v == 0.0 else float(v) for v in vals]
    probe = [f"{v:.7g}" for v in vals]
    if any("e" in s for s in probe):
        return [f"{v:.6e}" for v in vals]
    decimals = 0
    for s in probe:
        _, _, frac = s.partition(".")
        decimals = max(decimals, len(frac))
    return [f"{v:.{decimals}f}" for v in vals]


def _render_table(labels, headers, columns, left_justify=False, trailing=False):
    """Rows of label + right-aligned value cells under right-aligned headers."""
    label_w = max(len(s) for s in labels)
    widths = [
        max(len(h), max(len(s) for s in col)) for h, col in zip(headers, columns)
    ]
    tail = " " if trailing else ""
    lines = [
        " " * label_w
        + "".join(" " + h.rjust(w) for h, w in zip(headers, widths))
        + tail
    ]
    for r, label in enumerate(labels):
        cell = label.ljust(label_w) if left_justify else label.rjust(label_w)
        lines.append(
            cell + "".join(" " + col[r].rjust(w) for col, w in zip(columns, widths)) + tail
        )
    return lines


def format_vector(v, max_rows=None) -> str:
    """Render a JordanVector as a labelled block, one column per element.

    With ``max_rows`` set and exceeded, the middle rows collapse to a
    dotted line keeping the first and last five.
    """
    shape = v.shape
    labels = row_labels(shape)
    headers = [f"[{k}]" for k in range(1, v.n_columns + 1)]
    columns = [_column_strings(v.data[:, c]) for c in range(v.n_columns)]
    trailing = shape.kind != "albert"
    lines = _render_table(
        labels, headers, columns, left_justify=shape.kind == "spin", trailing=trailing
    )
    header, rows = lines[0], lines[1:]
    if max_rows is not None and len(rows) > max_rows and len(rows) > 10:
        width = max(len(r) for r in rows) - (1 if trailing else 0)
        dots = "." * width + (" " if trailing else "")
        rows = rows[:5] + [dots] + rows[-5:]
    body = "\n".join([header] + rows)
    return f"Vector of {shape.display_name()} with entries\n{body}"


def _format_real_grid(values, row_names, col_names) -> list:
    columns = [_column_strings(values[:, j]) for j in range(values.shape[1])]
    return _render_table(row_names, col_names, columns)


def format_dense(m) -> str:
    """Render a DenseMatrix.

    Width-1 matrices print as a plain numeric grid.  Wider entries print
    one row per basis coefficient with [i,j] entry columns in column-major
    order, followed by a small grid showing which entry sits where.
    """
    d, w = m.d, m.width
    if w == 1:
        lines = _format_real_grid(
            m.array[:, :, 0],
            [f"[{i},]" for i in range(1, d + 1)],
            [f"[,{j}]" for j in range(1, d + 1)],
        )
        return "\n".join(lines)
    # column-major entry order: [1,1], [2,1], ..., [d,d]
    headers = [f"[{i},{j}]" for j in range(1, d + 1) for i in range(1, d + 1)]
    coeff = np.stack(
        [m.array[i - 1, j - 1, :] for j in range(1, d + 1) for i in range(1, d + 1)],
        axis=1,
    )
    basis = list(BASIS_LABELS[w])
    lines = _render_table(
        basis,
        headers,
        [_column_strings(coeff[:, c]) for c in range(coeff.shape[1])],
        left_justify=True,
    )
    index = np.arange(1, d * d + 1).reshape(d, d, order="F")
    grid = _render_table(
        [f"[{i},]" for i in range(1, d + 1)],
        [f"[,{j}]" for j in range(1, d + 1)],
        [[str(index[i, j]) for i in range(d)] for j in range(d)],
    )
    return "\n".join(lines + grid)
