"""Command line front end.

Exit codes are a stable contract: 0 for pass/success, 1 for a negative
verdict or computation failure, 2 for usage errors.  ``-`` as a document
path reads stdin, so subcommands compose in pipes::

    polyharm witness --kind f1 | polyharm check - --class hc

POLYHARM_SEED overrides the default seed; explicit flags win over it.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import catalog, mapspec
from .classify import coefficient_bounds, membership
from .close_to_convex import fekete_szego_sweep
from .core import PolyharmonicMap
from .geometry import (
    DenominatorCollapse,
    PolarGrid,
    angle_witness_search,
    convex_certificate,
    sense_preserving_check,
    starlike_certificate,
)
from .render import RenderConfig, render_disk_image

_CLASS_TOKENS = {"hs": "starlike", "hc": "convex"}
SEED_ENV = "POLYHARM_SEED"


class _UsageError(Exception):
    """Bad invocation detected after argparse (exit code 2)."""


def _read_document(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise mapspec.SpecDocumentError(f"cannot read {path}: {exc.strerror}") from None


def _load_map(path: str) -> PolyharmonicMap:
    return mapspec.parse_spec(_read_document(path))


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _g(x: float) -> str:
    return f"{x:.17g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_check(args) -> int:
    F = _load_map(args.document)
    kind = _CLASS_TOKENS[args.cls]
    report = membership(F, kind)
    print(f"kind: {kind}")
    print(f"member: {'true' if report.member else 'false'}")
    print(f"lhs: {_g(report.lhs)}")
    print(f"rhs: {_g(report.rhs)}")
    print(f"slack: {_g(report.slack)}")
    print(f"budget: {_g(report.first_order_budget)}")
    if report.member:
        for row in coefficient_bounds(F, kind).rows:
            print(f"j={row.j} total={_g(row.total)} bound={_g(row.bound)} "
                  f"within={'true' if row.within else 'false'}")
    return 0 if report.member else 1


def _cmd_certify(args) -> int:
    F = _load_map(args.document)
    grid = PolarGrid.default(r_min=args.r_min, r_max=args.r_max,
                             radii=args.radii, angles=args.angles)
    runner = {"starlike": starlike_certificate,
              "convex": convex_certificate,
              "sense": sense_preserving_check}[args.property]
    report = runner(F, grid)
    print(report.record())
    return 0 if report.passed else 1


def _lambda_grid(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise _UsageError("--lambda-step must be positive")
    if hi < lo:
        raise _UsageError("--lambda-max must be >= --lambda-min")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(count)]


def _plot_sweep(rows, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    lams = [row.lam for row in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.plot(lams, [r.max_a for r in rows], "o-", label="empirical max |a3 - lam a2^2|")
    ax.plot(lams, [r.bound_a for r in rows], "--", label="analytic bound (analytic part)")
    ax.plot(lams, [r.max_b for r in rows], "s-", label="empirical max |b3 - lam b2^2|")
    ax.plot(lams, [r.bound_b for r in rows], ":", label="analytic bound (anti-analytic part)")
    ax.set_xlabel("lambda")
    ax.set_ylabel("functional value")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _cmd_fekete(args) -> int:
    seed = _resolve_seed(args.seed)
    lambdas = _lambda_grid(args.lambda_min, args.lambda_max, args.lambda_step)
    rows = fekete_szego_sweep(args.samples, lambdas, seed=seed)
    lines = ["lambda,max_a,bound_a,max_b,bound_b"]
    for row in rows:
        lines.append(",".join(_g(v) for v in
                              (row.lam, row.max_a, row.bound_a, row.max_b, row.bound_b)))
    _write_text(args.output, "\n".join(lines) + "\n")
    if args.plot is not None:
        path = args.plot
        if path == "":
            if args.output in (None, "-"):
                raise _UsageError("--plot with no path needs -o to derive a file name")
            path = os.path.splitext(args.output)[0] + ".png"
        _plot_sweep(rows, path)
    return 0 if all(row.within for row in rows) else 1


def _cmd_witness(args) -> int:
    F = catalog.witness_map(args.kind, degree=args.j, phase=args.phi)
    sys.stdout.write(mapspec.serialize(F, name=args.kind))
    return 0


def _cmd_theorem7(args) -> int:
    F = _load_map(args.document)
    result = angle_witness_search(F, angle_steps=args.angle_steps)
    print(result.record())
    return 0 if result.passed else 1


def _cmd_render(args) -> int:
    F = _load_map(args.document)
    cfg = RenderConfig(circles=args.circles, rays=args.rays,
                       samples_per_curve=args.samples, r_max=args.r_max,
                       canvas=args.canvas)
    _write_text(args.output, render_disk_image(F, cfg))
    return 0


def _add_document(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("document", help="mapping-spec JSON path, or - for stdin")


def _add_grid_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--r-min", type=float, default=0.05)
    parser.add_argument("--r-max", type=float, default=0.99)
    parser.add_argument("--radii", type=int, default=64)
    parser.add_argument("--angles", type=int, default=512)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyharm",
        description="Polyharmonic disk mappings: class checks, geometric "
                    "certificates, coefficient-functional sweeps, rendering.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="class membership and coefficient bounds")
    _add_document(p)
    p.add_argument("--class", dest="cls", choices=sorted(_CLASS_TOKENS),
                   default="hs", help="hs = starlike class, hc = convex class")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("certify", help="grid certificate for a geometric property")
    _add_document(p)
    p.add_argument("--property", required=True,
                   choices=("starlike", "convex", "sense"))
    _add_grid_flags(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("fekete", help="coefficient-functional sweep over random maps")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--lambda-min", type=float, default=-2.0)
    p.add_argument("--lambda-max", type=float, default=2.0)
    p.add_argument("--lambda-step", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=None,
                   help=f"default 0, or {SEED_ENV} if set")
    p.add_argument("-o", "--output", default=None, help="CSV path (default stdout)")
    p.add_argument("--plot", nargs="?", const="", default=None, metavar="PATH",
                   help="also write a figure; with no PATH, derive from -o")
    p.set_defaults(func=_cmd_fekete)

    p = sub.add_parser("witness", help="emit a named mapping as a spec document")
    p.add_argument("--kind", required=True, choices=catalog.WITNESS_TOKENS)
    p.add_argument("--j", type=int, default=3, help="degree for f2/f3")
    p.add_argument("--phi", type=float, default=math.pi / 6.0,
                   help="phase for f2/f3")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("theorem7", help="search rotation angles certifying starlikeness")
    _add_document(p)
    p.add_argument("--angle-steps", type=int, default=180)
    p.set_defaults(func=_cmd_theorem7)

    p = sub.add_parser("render", help="render the disk image as SVG")
    _add_document(p)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--circles", type=int, default=12)
    p.add_argument("--rays", type=int, default=24)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--r-max", type=float, default=0.999)
    p.add_argument("--canvas", type=int, default=800)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DenominatorCollapse as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (mapspec.SpecDocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
