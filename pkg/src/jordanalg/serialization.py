"""Text round-trip formats for element vectors and residual reports.

Vector files:

    jordan-v1 <kind> d=<d|-> n=<n|-> cols=<c>   <- header, single spaces
    weights: <w1> ... <wn>                      <- spin only, optional
    <row of cols reals>                         <- one line per packed row

Reals render in shortest round-trip decimal form, so parse(render(v))
reproduces every bit.  NaN/Inf are rejected.  Reports serialize as one
JSON object per line.
"""

from __future__ import annotations

import json
import math
import re

from .elements import JordanVector
from .errors import ParseError, ValidationError
from .report import ResidualReport
from .shapes import ALL_KINDS, AlgebraShape

__all__ = ["parse", "parse_report", "render", "render_report"]

HEADER_RE = re.compile(
    r"^jordan-v1 (?P<kind>[a-z]+) d=(?P<d>\d+|-) n=(?P<n>\d+|-) cols=(?P<cols>\d+)$"
)


def _float_str(v: float) -> str:
    if not math.isfinite(v):
        raise ValidationError(f"cannot serialize non-finite value {v!r}")
    return repr(float(v))


def render(v: JordanVector) -> str:
    """Serialize a JordanVector; inverse of parse, bit-exact."""
    shape = v.shape
    d = "-" if shape.d is None else str(shape.d)
    n = "-" if shape.n is None else str(shape.n)
    lines = [f"jordan-v1 {shape.kind} d={d} n={n} cols={v.n_columns}"]
    if shape.kind == "spin":
        lines.append("weights: " + " ".join(_float_str(w) for w in shape.ip_weights))
    for r in range(shape.packed_length):
        lines.append(" ".join(_float_str(x) for x in v.data[r, :]))
    return "\n".join(lines) + "\n"


def _parse_float(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"invalid number {token!r}", line=lineno) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite value {token!r} not allowed", line=lineno)
    return value


def parse(text: str) -> JordanVector:
    """Parse the vector format; errors carry 1-based line numbers."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", line=1)
    m = HEADER_RE.match(lines[0])
    if not m:
        raise ParseError(
            "malformed header, expected 'jordan-v1 <kind> d=<d|-> n=<n|-> cols=<c>'",
            line=1,
        )
    kind = m.group("kind")
    if kind not in ALL_KINDS:
        raise ParseError(f"unknown kind {kind!r}", line=1)
    d = None if m.group("d") == "-" else int(m.group("d"))
    n = None if m.group("n") == "-" else int(m.group("n"))
    cols = int(m.group("cols"))
    if cols < 1:
        raise ParseError("cols must be >= 1", line=1)

    body_start = 1
    weights = None
    if len(lines) > 1 and lines[1].startswith("weights:"):
        if kind != "spin":
            raise ParseError("weights line is only valid for spin", line=2)
        tokens = lines[1][len("weights:"):].split()
        weights = tuple(_parse_float(t, 2) for t in tokens)
        body_start = 2

    try:
        if kind == "spin":
            if n is None:
                raise ValueError("spin requires n")
            shape = AlgebraShape(kind, n=n, ip_weights=weights)
        else:
            if d is None:
                raise ValueError(f"{kind} requires d")
            shape = AlgebraShape(kind, d=d)
    except ValueError as exc:
        lineno = 2 if weights is not None and "weights" in str(exc) else 1
        raise ParseError(str(exc), line=lineno) from None

    rows = []
    expected = shape.packed_length
    for offset, line in enumerate(lines[body_start:]):
        lineno = body_start + offset + 1
        if not line.strip():
            if any(x.strip() for x in lines[body_start + offset:]):
                raise ParseError("blank line inside data block", line=lineno)
            break
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(
                f"expected {cols} values, got {len(tokens)}", line=lineno
            )
        rows.append([_parse_float(t, lineno) for t in tokens])
    if len(rows) != expected:
        raise ParseError(
            f"expected {expected} rows for {shape!r}, got {len(rows)}",
            line=body_start + len(rows) + 1,
        )
    return JordanVector(shape, rows)


def _shape_fields(shape: AlgebraShape) -> dict:
    fields = {"kind": shape.kind, "d": shape.d, "n": shape.n}
    if shape.kind == "spin":
        fields["weights"] = list(shape.ip_weights)
    return fields


def render_report(r: ResidualReport) -> str:
    """One-line JSON for a ResidualReport; inverse of parse_report."""
    payload = {"format": "jordan-report-v1"}
    payload.update(_shape_fields(r.shape))
    payload.update(
        identity=r.identity_name,
        trials=r.trials,
        max_abs=r.max_abs,
        per_trial_max=list(r.per_trial_max),
    )
    return json.dumps(payload)


def parse_report(text: str) -> ResidualReport:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", line=1) from None
    if not isinstance(payload, dict) or payload.get("format") != "jordan-report-v1":
        raise ParseError("missing or unknown report format marker", line=1)
    try:
        kind = payload["kind"]
        if kind == "spin":
            weights = payload.get("weights")
            shape = AlgebraShape(
                kind, n=payload["n"], ip_weights=tuple(weights) if weights else None
            )
        else:
            shape = AlgebraShape(kind, d=payload["d"])
        return ResidualReport(
            shape=shape,
            identity_name=payload["identity"],
            trials=int(payload["trials"]),
            max_abs=float(payload["max_abs"]),
            per_trial_max=tuple(float(v) for v in payload["per_trial_max"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad report payload: {exc}", line=1) from None
