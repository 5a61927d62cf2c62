"""Command line interface: verification suites, a walkthrough demo, benchmarks.

Exit codes: 0 when every suite passes or confirms its expected failure,
1 when any suite misbehaves, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _kernels
from .elements import to_dense
from .formatting import format_dense, format_vector
from .product import dense_jordan_arrays, jordan_product
from .random_gen import GenConfig, trial_elements
from .shapes import AlgebraShape, qhm_shape, rsm_shape, spin_shape
from .suites import IDENTITIES, run_suite_outcome

__all__ = ["main"]

VERIFY_KIND_ORDER = ("rsm", "chm", "qhm", "albert", "spin", "oherm")
IDENTITY_ORDER = ("commute", "distribute", "associate", "jordan", "jacobson", "g8", "g9")
DEFAULT_D = {"rsm": 5, "chm": 5, "qhm": 5, "albert": 3, "oherm": 4}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jordanalg",
        description="Numerical Jordan algebras: verify identities, demo, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="run identity suites and report pass/fail verdicts",
        description=(
            "Run seeded identity suites. A suite passes when its residual "
            "stays under base * scale**degree; expected failures must land "
            "above an absolute floor to be confirmed."
        ),
    )
    verify.add_argument(
        "--kind",
        choices=("all",) + VERIFY_KIND_ORDER,
        default="all",
        help="algebra kind (default: all)",
    )
    verify.add_argument(
        "--d",
        type=int,
        default=None,
        help="matrix dimension (default 5; oherm 4; albert fixed at 3)",
    )
    verify.add_argument(
        "--spin-n", type=int, default=None, help="spin vector dimension (default 5)"
    )
    verify.add_argument(
        "--identity",
        choices=("all",) + IDENTITY_ORDER,
        default="all",
        help="identity to check (default: all)",
    )
    verify.add_argument("--trials", type=int, default=100, help="trials per suite")
    verify.add_argument("--seed", type=int, default=0, help="base RNG seed")
    verify.add_argument(
        "--tol",
        type=float,
        default=None,
        help="override the pass-threshold base (scale exponent still applies)",
    )
    verify.add_argument(
        "--format", choices=("text", "json-lines"), default="text", help="output format"
    )
    verify.set_defaults(func=cmd_verify)

    demo = sub.add_parser(
        "demo",
        help="print the fixed-seed walkthrough",
        description="Walk through products, identities, and dense coercion "
        "with seeded 2-decimal draws; same seed gives byte-identical output.",
    )
    demo.add_argument("--seed", type=int, default=0, help="RNG seed")
    demo.set_defaults(func=cmd_demo)

    bench = sub.add_parser(
        "bench",
        help="time the kernel backends against each other",
        description="Time Jordan products per backend and cross-check parity.",
    )
    bench.add_argument("--d", type=int, default=5, help="matrix dimension")
    bench.add_argument("--trials", type=int, default=25, help="random pairs per kind")
    bench.add_argument("--repeat", type=int, default=20, help="products per pair")
    bench.add_argument("--seed", type=int, default=0, help="RNG seed")
    bench.set_defaults(func=cmd_bench)
    return parser


# ---------------------------------------------------------------------------
# verify


def _shape_for(kind: str, d, spin_n) -> AlgebraShape:
    if kind == "spin":
        return AlgebraShape("spin", n=spin_n if spin_n is not None else 5)
    return AlgebraShape(kind, d=d if d is not None else DEFAULT_D[kind])


def _verify_plan(parser, args):
    """Validate flag combinations and expand to (shape, identity) pairs."""
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    if args.tol is not None and args.tol <= 0:
        parser.error("--tol must be positive")
    if args.kind == "spin" and args.d is not None:
        parser.error("--d is not valid with --kind spin; use --spin-n")
    if args.kind not in ("spin", "all") and args.spin_n is not None:
        parser.error(f"--spin-n is not valid with --kind {args.kind}")
    if args.kind == "albert" and args.d is not None and args.d != 3:
        parser.error("albert is fixed at d=3")
    if args.d is not None and args.d < 1:
        parser.error("--d must be >= 1")
    if args.spin_n is not None and args.spin_n < 1:
        parser.error("--spin-n must be >= 1")

    kinds = VERIFY_KIND_ORDER if args.kind == "all" else (args.kind,)
    identities = IDENTITY_ORDER if args.identity == "all" else (args.identity,)
    plan = []
    for kind in kinds:
        # under --kind all, --d drives the sized kinds and albert stays at 3
        d = args.d if not (args.kind == "all" and kind == "albert") else None
        shape = _shape_for(kind, d, args.spin_n)
        for identity in identities:
            plan.append((shape, identity))
    return plan


def _text_rows(outcomes):
    headers = (
        "kind", "d", "n", "identity", "trials", "seed",
        "max_abs", "threshold", "expect", "verdict", "note",
    )
    rows = [headers]
    for o in outcomes:
        rows.append(
            (
                o.shape.kind,
                "-" if o.shape.d is None else str(o.shape.d),
                "-" if o.shape.n is None else str(o.shape.n),
                o.identity,
                str(o.trials),
                str(o.seed),
                f"{o.max_abs:.6e}",
                f"{o.threshold:.6e}",
                o.expected,
                o.verdict,
                o.note or "-",
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(headers))]
    return [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]


def cmd_verify(parser, args) -> int:
    plan = _verify_plan(parser, args)
    outcomes = [
        run_suite_outcome(shape, identity, trials=args.trials, seed=args.seed, tol=args.tol)
        for shape, identity in plan
    ]
    if args.format == "json-lines":
        for o in outcomes:
            record = {
                "identity": o.identity,
                "kind": o.shape.kind,
                "d": o.shape.d,
                "trials": o.trials,
                "seed": o.seed,
                "max_abs": o.max_abs,
                "threshold": o.threshold,
                "verdict": o.verdict,
            }
            if o.shape.kind == "spin":
                record["n"] = o.shape.n
            record["expected"] = o.expected
            if o.note:
                record["note"] = o.note
            print(json.dumps(record))
    else:
        for line in _text_rows(outcomes):
            print(line)
        counts = {}
        for o in outcomes:
            counts[o.verdict] = counts.get(o.verdict, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        ok = all(o.ok for o in outcomes)
        print()
        print(f"{len(outcomes)} suite(s): {summary}")
        print(f"overall: {'OK' if ok else 'FAIL'}")
    return 0 if all(o.ok for o in outcomes) else 1


# ---------------------------------------------------------------------------
# demo


def cmd_demo(parser, args) -> int:
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    out = []
    rsm = rsm_shape(5)
    cfg = GenConfig(seed=args.seed, n_columns=3, d=5, distribution="rounded_normal_2dp")
    x = trial_elements(rsm, cfg, 0)
    y = trial_elements(rsm, cfg, 1)
    z = trial_elements(rsm, cfg, 2)

    out.append(f"Jordan algebra walkthrough (seed {args.seed})")
    out.append("=" * len(out[-1]))
    out.append("")
    out.append("Three random real symmetric matrix elements (d=5), one per column;")
    out.append("each column packs the 15 lower-triangle degrees of freedom:")
    out.append("")
    out.append("x =")
    out.append(format_vector(x))
    out.append("")
    out.append("Scalar multiplication acts on every coordinate:")
    out.append("")
    out.append("x * 100 =")
    out.append(format_vector(x * 100))
    out.append("")
    out.append("Linear combinations are coordinatewise:")
    out.append("")
    out.append("x + y*3 =")
    out.append(format_vector(x + y * 3))
    out.append("")
    out.append("Adding a scalar adds it to every packed coordinate, by analogy")
    out.append("with matrix-plus-scalar:")
    out.append("")
    out.append("x + 100 =")
    out.append(format_vector(x + 100))
    out.append("")
    out.append("The Jordan product x o y = (xy + yx)/2, columnwise:")
    out.append("")
    out.append("x * y =")
    out.append(format_vector(x * y))
    out.append("")
    out.append("Distributivity holds to numerical precision:")
    out.append("")
    out.append("x*(y+z) - (x*y + x*z) =")
    dist = x * (y + z) - (x * y + x * z)
    out.append(format_vector(dist))
    out.append(f"max |distributive residual| = {dist.max_abs():.6e}")
    out.append("")
    out.append("Associativity does NOT hold; the residual is order one:")
    out.append("")
    out.append("x*(y*z) - (x*y)*z =")
    assoc = x * (y * z) - (x * y) * z
    out.append(format_vector(assoc))
    out.append(f"max |associator| = {assoc.max_abs():.6e}")
    out.append("")
    out.append("The Jordan identity (xy)(xx) = x(y(xx)) is satisfied:")
    out.append("")
    out.append("(x*y)*(x*x) - x*(y*(x*x)) =")
    xx = x * x
    jordan = (x * y) * xx - x * (y * xx)
    out.append(format_vector(jordan))
    out.append(f"max |jordan residual| = {jordan.max_abs():.6e}")
    out.append("")
    out.append("A single element coerces to its dense symmetric matrix; M2 is")
    out.append("the dense form of the second column of x:")
    out.append("")
    m1 = to_dense(x[0])
    m2 = to_dense(x[1])
    out.append(format_dense(m2))
    out.append("")
    out.append("The raw dense product (M1 M2 + M2 M1)/2 stays symmetric before")
    out.append("packing ever touches it:")
    raw = dense_jordan_arrays(m1.array, m2.array)
    defect = float(abs(raw - raw.transpose(1, 0, 2)).max())
    out.append(f"max |raw product - transpose| = {defect:.6e}")
    out.append("")
    out.append("A quaternionic Hermitian element (d=2) in dense form; diagonal")
    out.append("entries are pure real and [1,2] is the conjugate of [2,1]:")
    out.append("")
    qcfg = GenConfig(seed=args.seed, n_columns=1, d=2, distribution="rounded_normal_2dp")
    q = trial_elements(qhm_shape(2), qcfg, 0)
    out.append(format_dense(to_dense(q[0])))
    out.append("")
    out.append("Spin factors multiply as (a, u)(b, v) = (ab + <u,v>, a v + b u):")
    out.append("")
    scfg = GenConfig(seed=args.seed, n_columns=3, spin_n=5, distribution="rounded_normal_2dp")
    spin = spin_shape(5)
    si = trial_elements(spin, scfg, 0)
    sj = trial_elements(spin, scfg, 1)
    out.append("I =")
    out.append(format_vector(si))
    out.append("")
    out.append("I*J - J*I is identically zero; the product rule is symmetric:")
    out.append("")
    comm = si * sj - sj * si
    out.append(format_vector(comm))
    out.append(f"max |commutator| = {comm.max_abs():.6e}")
    print("\n".join(out))
    return 0


# ---------------------------------------------------------------------------
# bench


def cmd_bench(parser, args) -> int:
    if args.trials < 1 or args.repeat < 1:
        parser.error("--trials and --repeat must be >= 1")
    if args.d < 1:
        parser.error("--d must be >= 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must fit in 64 unsigned bits")
    shapes = [
        AlgebraShape("rsm", d=args.d),
        AlgebraShape("qhm", d=args.d),
        AlgebraShape("albert", d=3),
    ]
    backends = _kernels.available_backends()
    print(f"backends: {', '.join(backends)} (active default: {_kernels.backend_name()})")
    initial = _kernels.backend_name()
    try:
        for shape in shapes:
            cfg = GenConfig(seed=args.seed, n_columns=2, d=shape.d)
            pairs = [trial_elements(shape, cfg, t) for t in range(args.trials)]
            results = {}
            for backend in backends:
                _kernels.use_backend(backend)
                start = time.perf_counter()
                acc = None
                for v in pairs:
                    for _ in range(args.repeat):
                        acc = jordan_product(v[0], v[1])
                elapsed = time.perf_counter() - start
                n_products = args.trials * args.repeat
                results[backend] = (elapsed, acc)
                print(
                    f"kind={shape.kind:<6} d={shape.d} backend={backend:<7} "
                    f"products={n_products:<6} wall_ms={elapsed * 1e3:9.2f} "
                    f"us_per_product={elapsed / n_products * 1e6:9.2f}"
                )
            if len(results) > 1:
                ref = results[backends[0]][1].coords
                worst = max(
                    float(abs(res[1].coords - ref).max()) for res in results.values()
                )
                print(f"kind={shape.kind:<6} cross-backend max |difference| = {worst:.6e}")
    finally:
        _kernels.use_backend(initial)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
