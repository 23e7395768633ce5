"""Command-line surface: generators, covers, hulls, depth, experiments.

Point files are newline-delimited "x y" integer pairs; lines starting with
'#' are ignored.  Exit codes: 0 success, 1 verification or invariant
failure, 2 usage / parse / I-O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import boxhull, depth, lab, render
from .cover import build_cover, build_cover_basic, build_k_cover, verify_cover
from .geom import GeomError, PointSet, validate

SCHEMA = 1


class PointFileError(ValueError):
    pass


def parse_points(text: str) -> PointSet:
    coords = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFileError(f"line {lineno}: expected 'x y', got {raw!r}")
        try:
            coords.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise PointFileError(f"line {lineno}: {exc}") from exc
    try:
        return validate(coords)
    except GeomError as exc:
        raise PointFileError(str(exc)) from exc


def format_points(coords) -> str:
    return "".join(f"{x} {y}\n" for x, y in coords)


def read_points(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh.read())


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def _fmt_half(f: Fraction) -> str:
    """Exact decimal for integers and half-integers of any magnitude."""
    sign = "-" if f < 0 else ""
    whole, rem = divmod(abs(f.numerator), f.denominator)
    return f"{sign}{whole}.5" if rem else f"{sign}{whole}"


def _cmd_gen(args) -> int:
    if args.family == "two-diagonals":
        if args.m is None:
            print("gen two-diagonals requires --m", file=sys.stderr)
            return 2
        inst = lab.gen_two_diagonals(args.m)
    elif args.family == "lower-bound":
        if args.n is None:
            print("gen lower-bound requires --n", file=sys.stderr)
            return 2
        inst = lab.gen_lower_bound(args.n)
    else:
        if args.n is None:
            print("gen uniform requires --n", file=sys.stderr)
            return 2
        inst = lab.gen_uniform(args.n, args.seed)
    _write(args.output, format_points(inst.ps.coords()))
    return 0


def _cmd_cover(args) -> int:
    ps = read_points(args.points)
    if args.k is not None:
        cov = build_k_cover(ps, args.k)
    elif args.basic:
        cov = build_cover_basic(ps)
    else:
        cov = build_cover(ps)
    stats = {
        "schema": SCHEMA,
        "n": ps.n,
        "edges": cov.stats.edges,
        "biclique_count": cov.stats.count,
        "cover_weight": cov.stats.weight,
        "build_ms": cov.stats.build_ms,
        "parameters": {"variant": cov.stats.variant, "k": args.k},
    }
    code = 0
    if args.verify:
        if ps.n > 2048:
            print("--verify is capped at n <= 2048 (oracle cost)",
                  file=sys.stderr)
            return 2
        report = verify_cover(cov, ps, k=args.k)
        stats["verify"] = report.to_dict()
        if not report.ok:
            code = 1
    _write(args.json, json.dumps(stats, indent=2) + "\n")
    return code


def _cmd_hull(args) -> int:
    ps = read_points(args.points)
    hull = boxhull.build_hull(ps)
    if args.json or not (args.svg or args.cover_svg):
        doc = {
            "schema": SCHEMA,
            "n": ps.n,
            "hull_area": hull.area(),
            "boundary": [list(v) for v in hull.boundary],
            "bbox": list(hull.bbox),
        }
        _write(args.json, json.dumps(doc, indent=2) + "\n")
    if args.svg:
        _write(args.svg, render.hull_svg(ps, hull))
    if args.cover_svg:
        _write(args.cover_svg, render.cover_svg(ps, boxhull.disjoint_cover(ps)))
    return 0


def _cmd_depth(args) -> int:
    ps = read_points(args.points)
    if args.log_approx:
        pt, value = depth.log_approx_max_depth(ps)
        print(f"witness {_fmt_half(pt[0])} {_fmt_half(pt[1])}")
        print(f"depth {value}")
        return 0
    try:
        if args.max:
            pt, value = depth.approx_max_depth(ps, args.eps)
            print(f"witness {_fmt_half(pt[0])} {_fmt_half(pt[1])}")
            print(f"depth {value}")
        else:
            ix = depth.build_depth_index(ps, args.eps)
            qx, qy = args.query
            print(depth.query_depth(ix, (qx, qy)))
    except depth.EpsOutOfRange as exc:
        print(str(exc), file=sys.stderr)
        return 2
    return 0


def _cmd_bench(args) -> int:
    ns = [int(v) for v in args.ns.split(",") if v]
    if not ns:
        print("--ns must name at least one size", file=sys.stderr)
        return 2
    rep = lab.edge_count_experiment(ns, range(args.seeds))
    _write(args.json, json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0 if rep.ok else 1


def _cmd_fuzz(args) -> int:
    rep = lab.structural_fuzz([args.n], range(args.seeds))
    _write(args.json, json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0 if rep.ok else 1


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="boxrig",
        description="empty-rectangle influence graphs: covers, hulls, depth")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write a generated point file")
    g.add_argument("family", choices=["two-diagonals", "lower-bound", "uniform"])
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("cover", help="build a biclique cover, emit stats")
    c.add_argument("points")
    c.add_argument("--k", type=int, default=None)
    c.add_argument("--basic", action="store_true")
    c.add_argument("--json", default=None)
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=_cmd_cover)

    h = sub.add_parser("hull", help="box hull boundary, SVG, disjoint cover")
    h.add_argument("points")
    h.add_argument("--svg", default=None)
    h.add_argument("--cover-svg", dest="cover_svg", default=None)
    h.add_argument("--json", default=None)
    h.set_defaults(func=_cmd_hull)

    d = sub.add_parser("depth", help="approximate rectangle depth")
    d.add_argument("points")
    mode = d.add_mutually_exclusive_group(required=True)
    mode.add_argument("--query", nargs=2, type=_fraction, metavar=("X", "Y"))
    mode.add_argument("--max", action="store_true")
    mode.add_argument("--log-approx", dest="log_approx", action="store_true")
    d.add_argument("--eps", type=float, default=0.5)
    d.set_defaults(func=_cmd_depth)

    b = sub.add_parser("bench", help="edge-count scaling experiment")
    b.add_argument("--ns", required=True)
    b.add_argument("--seeds", type=int, default=1)
    b.add_argument("--json", default=None)
    b.set_defaults(func=_cmd_bench)

    f = sub.add_parser("fuzz", help="structural property fuzzing")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--seeds", type=int, default=10)
    f.add_argument("--json", default=None)
    f.set_defaults(func=_cmd_fuzz)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (OSError, PointFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
