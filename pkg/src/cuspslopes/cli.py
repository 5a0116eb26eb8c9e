"""Command-line front door for the slope toolkit.

Subcommands mirror the library: slope enumeration, the count-bound
pipeline, finite-field lemma verification, surface audits, horodisk
calculus, lattice diagrams and full analysis reports.  Output is
deterministic (timestamps only with --stamp); exit codes are 0 on success,
1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from datetime import datetime, timezone

from . import __version__
from .bound_calculus import ADAMS_AREA, CAO_MEYERHOFF_AREA, BoundQuery, slope_count_bound, verify_counting_lemma
from .cusp_geometry import area
from .diagram import DiagramSpec, emit_lattice_svg
from .halfplane_geometry import (
    HorodiskPair,
    WrappingQuery,
    extremal_ratio,
    mutually_tangent,
    tangency_separation,
    wrapping_bound,
)
from .report_io import (
    _dumps,
    build_analysis_report,
    find_shape,
    load_cusp_file,
    report_to_dict,
    report_to_json,
    save_report,
)
from .slope_search import SIX_THEOREM_LENGTH, enumerate_short_slopes
from .surface_audit import SurfaceAudit, SurfaceType, check_cusp_length_inequality, euler_characteristic


def _parse_threshold(text: str) -> float:
    if text.strip().lower() == "2pi":
        return 2.0 * math.pi
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"threshold must be a number or '2pi', got {text!r}"
        ) from None


def _parse_area(text: str) -> float:
    lowered = text.strip().lower()
    if lowered == "adams":
        return ADAMS_AREA
    if lowered == "cao-meyerhoff":
        return CAO_MEYERHOFF_AREA
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"area must be a number, 'adams' or 'cao-meyerhoff', got {text!r}"
        ) from None


def _parse_surface(text: str) -> SurfaceType:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"surface must be 'genus,punctures,boundary', got {text!r}"
        )
    try:
        g, n, b = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"surface fields must be integers: {text!r}") from None
    return SurfaceType(g, n, b)


def _parse_lengths(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"lengths must be comma-separated numbers: {text!r}") from None


def _load_named_shape(args):
    shapes, errors = load_cusp_file(args.cusp)
    for err in errors:
        print(f"warning: skipped {err}", file=sys.stderr)
    return find_shape(shapes, args.name)


def _print_json(data) -> None:
    sys.stdout.write(_dumps(data) + "\n")


def _cmd_slopes(args) -> int:
    shape = _load_named_shape(args)
    report = enumerate_short_slopes(shape, args.threshold)
    if args.json:
        _print_json(report_to_dict(build_analysis_report(shape, args.threshold)))
        return 0
    print(f"# cusp {shape.name}  threshold {args.threshold:.12g}  area {area(shape):.12g}")
    print(f"# {len(report)} slopes, max pairwise intersection {report.max_delta}")
    for i, entry in enumerate(report.entries, start=1):
        flag = "  boundary" if entry.boundary else ""
        print(f"{i:3d}  {str(entry.slope):>10}  {entry.length:.12g}{flag}")
    return 0


def _cmd_bound(args) -> int:
    report = slope_count_bound(BoundQuery(args.length, args.area))
    if args.json:
        _print_json(
            {
                "length_threshold": report.query.length_threshold,
                "area_floor": report.query.area_floor,
                "delta_max": report.delta_max,
                "prime": report.prime,
                "count_bound": report.count_bound,
                "floor_guard_hit": report.floor_guard_hit,
            }
        )
        return 0
    ratio = report.query.length_threshold**2 / report.query.area_floor
    print(f"L^2/A = {ratio:.12g}")
    print(f"Δ ≤ {report.delta_max}, p = {report.prime}, slopes ≤ {report.count_bound}")
    return 0


def _cmd_lemma_verify(args) -> int:
    shape = _load_named_shape(args)
    short = enumerate_short_slopes(shape, args.threshold)
    pipeline = slope_count_bound(BoundQuery(args.threshold, area(shape)))
    prime = args.prime if args.prime is not None else pipeline.prime
    verdict = verify_counting_lemma(short.slopes, prime)
    if args.json:
        _print_json(
            {
                "shape": shape.name,
                "threshold": args.threshold,
                "slope_count": len(short),
                "max_delta": short.max_delta,
                "prime": prime,
                "injective": verdict.injective,
                "collision": None
                if verdict.collision is None
                else [[s.a, s.b] for s in verdict.collision],
                "delta": verdict.delta,
            }
        )
        return 0
    print(f"# cusp {shape.name}: {len(short)} slopes of length <= {args.threshold:.12g}")
    print(f"# max pairwise intersection {short.max_delta}, prime {prime}")
    if verdict.injective:
        print(f"injective: all {len(short)} slopes map to distinct points of F_{prime}P^1")
    else:
        s1, s2 = verdict.collision
        print(f"collision: {s1} and {s2} coincide mod {prime} (delta = {verdict.delta})")
    return 0


def _cmd_audit(args) -> int:
    audit = SurfaceAudit(args.surface, args.lengths)
    verdict = check_cusp_length_inequality(audit)
    chi = euler_characteristic(args.surface)
    if args.json:
        _print_json(
            {
                "surface": {
                    "genus": args.surface.genus,
                    "punctures": args.surface.punctures,
                    "boundary_circles": args.surface.boundary_circles,
                },
                "euler_characteristic": chi,
                "lengths": list(args.lengths),
                "total_length": verdict.lhs,
                "budget": verdict.rhs,
                "passed": verdict.passed,
                "slack": verdict.slack,
                "sharp": verdict.sharp,
            }
        )
        return 0
    outcome = "pass" if verdict.passed else "fail"
    if verdict.sharp:
        outcome += " (sharp)"
    print(f"chi = {chi}, budget 6|chi| = {verdict.rhs:.12g}")
    print(f"total slope length = {verdict.lhs:.12g}")
    print(f"{outcome}: slack = {verdict.slack:.12g}")
    return 0


def _cmd_horodisk(args) -> int:
    if args.ratio:
        ratio = extremal_ratio()
        separation = tangency_separation(HorodiskPair(1.0, ratio))
        if args.json:
            _print_json({"extremal_ratio": ratio, "tangency_separation": separation})
        else:
            print(f"extremal radius ratio R/r = {ratio:.12g}")
            print(f"tangency separation at that ratio = {separation:.12g}")
    elif args.separation is not None:
        r, big_r = args.separation
        pair = HorodiskPair(r, big_r)
        check = mutually_tangent(pair)
        sep = tangency_separation(pair)
        if args.json:
            _print_json(
                {
                    "r": r,
                    "R": big_r,
                    "separation": sep,
                    "mutually_tangent": check.tangent,
                    "residual": check.residual,
                }
            )
        else:
            print(f"tangency separation ln(R/r) = {sep:.12g}")
            touch = "yes" if check.tangent else "no"
            print(f"mutually tangent: {touch} (residual {check.residual:.12g})")
    else:
        eps, length = args.wrapping
        bound = wrapping_bound(WrappingQuery(eps, length))
        if args.json:
            _print_json({"epsilon": eps, "loop_length": length, "wrapping_bound": bound})
        else:
            print(f"wrapping number bound = {bound:.12g}")
    return 0


def _cmd_diagram(args) -> int:
    shape = _load_named_shape(args)
    report = enumerate_short_slopes(shape, args.threshold)
    spec = DiagramSpec(
        report,
        radius_circle=not args.no_circle,
        lattice_extent=args.extent,
        label_slopes=args.labels,
        width=args.width,
        height=args.height,
    )
    svg = emit_lattice_svg(spec)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(svg)
    print(f"wrote {args.out}: {len(report)} slopes, {2 * len(report)} highlighted markers")
    return 0


def _cmd_report(args) -> int:
    shape = _load_named_shape(args)
    stamp = datetime.now(timezone.utc).isoformat() if args.stamp else None
    report = build_analysis_report(
        shape,
        args.threshold,
        area_floor=args.area,
        prime=args.prime,
        timestamp=stamp,
    )
    if args.out:
        save_report(report, args.out)
        print(f"wrote {args.out}: {len(report.entries)} slopes, count bound {report.bound.count_bound}")
    else:
        sys.stdout.write(report_to_json(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuspslopes",
        description="Slope geometry on hyperbolic cusp tori.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cusp_args(p):
        p.add_argument("--cusp", required=True, help="cusp file path ('-' for stdin)")
        p.add_argument("--name", required=True, help="cusp name within the file")
        p.add_argument(
            "--threshold",
            type=_parse_threshold,
            default=SIX_THEOREM_LENGTH,
            help="length threshold (number or '2pi'; default 6)",
        )

    p = sub.add_parser("slopes", help="enumerate short slopes on a cusp")
    add_cusp_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_slopes)

    p = sub.add_parser("bound", help="crossing ceiling, next prime, count bound")
    p.add_argument("--length", type=_parse_threshold, default=SIX_THEOREM_LENGTH)
    p.add_argument(
        "--area",
        type=_parse_area,
        default=CAO_MEYERHOFF_AREA,
        help="area floor (number, 'adams' or 'cao-meyerhoff'; default 3.35)",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("lemma-verify", help="check injectivity into F_p P^1")
    add_cusp_args(p)
    p.add_argument("--prime", type=int, help="override the pipeline prime")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemma_verify)

    p = sub.add_parser("audit", help="cusp-length budget audit for a surface")
    p.add_argument("--surface", type=_parse_surface, required=True, metavar="g,n,b")
    p.add_argument("--lengths", type=_parse_lengths, required=True, metavar="l1,l2,...")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("horodisk", help="half-plane horodisk calculus")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ratio", action="store_true", help="extremal radius ratio")
    group.add_argument("--separation", nargs=2, type=float, metavar=("r", "R"))
    group.add_argument("--wrapping", nargs=2, type=float, metavar=("eps", "len"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_horodisk)

    p = sub.add_parser("diagram", help="write an SVG lattice diagram")
    add_cusp_args(p)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--extent", type=int, default=4, help="lattice translates per axis")
    p.add_argument("--labels", action="store_true", help="label slope points")
    p.add_argument("--no-circle", action="store_true", help="omit the threshold circle")
    p.add_argument("--width", type=int, default=600)
    p.add_argument("--height", type=int, default=600)
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("report", help="full analysis report for a cusp")
    add_cusp_args(p)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--area", type=_parse_area, help="area floor (default: shape area)")
    p.add_argument("--prime", type=int, help="override the pipeline prime")
    p.add_argument("--stamp", action="store_true", help="include a UTC timestamp")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
