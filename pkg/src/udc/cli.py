"""``udc`` command line: solve, oracle, gen, bench."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import kernels
from .algorithms import AlgorithmReport, default_width, solve_linf, solve_single_shift, solve_smoothed, verify_cover
from .bench import CSV_HEADER, run_bench
from .formats import emit_json, emit_svg, format_points, parse_points, write_atomic
from .generate import gen_instance
from .geometry import DEFAULT_EPS, Norm
from .oracle import DEFAULT_LIMIT, solve_exact
from .strips import StripConfig


class CliError(Exception):
    pass


def _read_points(path: str):
    with open(path, encoding="utf-8") as f:
        text = f.read()
    try:
        return parse_points(text)
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from None


def _floats(text: str, n: int, what: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad {what}: {text!r}") from None
    if len(vals) != n:
        raise argparse.ArgumentTypeError(f"{what} needs {n} comma-separated numbers")
    return vals


def _box(text: str):
    return _floats(text, 4, "box")


def _sizes(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def _norm(text: str) -> Norm:
    try:
        return Norm.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_solve(args) -> None:
    pts = _read_points(args.input)
    norm = args.norm
    if args.algo == "linf" and not norm.exponent == float("inf"):
        raise CliError("--algo linf requires --norm linf")
    width = args.width if args.width is not None else default_width(norm)
    if args.algo == "smooth":
        if args.shift is not None:
            raise CliError("--shift does not apply to --algo smooth")
        report = solve_smoothed(norm, pts, num_shifts=args.shifts, width=width)
    else:
        cfg = StripConfig(width, args.shift or 0.0)
        report = solve_linf(pts, cfg) if args.algo == "linf" else solve_single_shift(norm, pts, cfg)
    check = verify_cover(report.solution, pts, args.eps)
    if not check:
        raise CliError(f"internal check failed: point {check.index} {tuple(check.witness)} is uncovered")
    outputs = [(args.output, emit_json(report))]
    if args.svg:
        outputs.append((args.svg, emit_svg(report, pts)))
    for path, text in outputs:
        write_atomic(path, text)


def cmd_oracle(args) -> None:
    pts = _read_points(args.input)
    if args.norm.kind not in ("l2", "linf"):
        raise CliError("oracle supports --norm l2 or linf")
    sol = solve_exact(args.norm, pts, limit=args.limit)
    write_atomic(args.output, emit_json(AlgorithmReport(sol, [], 0.0, algorithm="oracle")))


def cmd_gen(args) -> None:
    centers = None
    if args.centers:
        centers = [tuple(p) for p in _read_points(args.centers)]
    box = args.box or (0.0, 0.0, 20.0, 20.0)
    pts = gen_instance(args.kind, args.n, args.seed, box=box, centers=centers, k=args.k)
    write_atomic(args.output, format_points(pts))


def cmd_bench(args) -> None:
    backend = None if args.backend == "auto" else args.backend
    if backend and backend not in kernels.BACKENDS:
        raise CliError(f"backend {backend!r} is not available (have: {', '.join(kernels.BACKENDS)})")
    if args.algo == "linf" and args.norm.exponent != float("inf"):
        raise CliError("--algo linf requires --norm linf")
    records = run_bench(args.sizes, args.algo, args.norm, args.repeats, args.seed, backend=backend)
    lines = [CSV_HEADER] + [r.csv() for r in records]
    sys.stdout.write("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="udc", description="Unit disk cover on parallel restriction lines.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="approximate cover of a point file")
    s.add_argument("--input", required=True)
    s.add_argument("--norm", required=True, type=_norm, help="l2, linf or lp:P")
    s.add_argument("--algo", choices=["single", "smooth", "linf"], default="smooth")
    s.add_argument("--width", type=float)
    s.add_argument("--shift", type=float)
    s.add_argument("--shifts", type=int, default=6)
    s.add_argument("--eps", type=float, default=DEFAULT_EPS)
    s.add_argument("--output", required=True)
    s.add_argument("--svg")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exact optimum for a small point file")
    o.add_argument("--input", required=True)
    o.add_argument("--norm", required=True, type=_norm)
    o.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    o.add_argument("--output", required=True)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("kind", choices=["uniform", "clusters"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    where = g.add_mutually_exclusive_group()
    where.add_argument("--box", type=_box, help="X0,Y0,X1,Y1 (default 0,0,20,20)")
    where.add_argument("--centers", help="point file of cluster centers")
    g.add_argument("--k", type=int, default=1, help="number of random cluster centers")
    g.add_argument("--output", required=True)
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time a solver on uniform instances, CSV to stdout")
    b.add_argument("--sizes", type=_sizes, required=True)
    b.add_argument("--algo", choices=["single", "smooth", "linf"], required=True)
    b.add_argument("--norm", type=_norm, required=True)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--backend", choices=["auto", "cython", "python"], default="auto")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"udc: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
