"""Command-line interface.

Subcommands wrap the library one-to-one and keep no domain logic of their
own. Exit codes: 0 success, 1 validation/domain failure, 2 usage error.
Domain errors print a JSON object on standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import analyze
from .errors import MatchstickError
from .faces import enumerate_faces
from .generators import (gen_disk_lattice, gen_grid, gen_rhombus_strip,
                         gen_triangle_free, gen_zonotope)
from .geometry import TolerancePolicy
from .graph import DiskSpec, load_graph, save_graph, validate
from .pathfinder import extend_path
from .reduction import reduce_graph
from .render import RenderStyle, render_svg
from .search import (DEFAULT_BUDGET, CandidateFamily, BudgetExceeded,
                     conjecture_probe, max_edges_over_family)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="matchsticks",
        description="Construct, validate, and analyze matchstick graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a construction as a graph file")
    gsub = gen.add_subparsers(dest="kind", required=True)
    pg = gsub.add_parser("grid", help="k x k integer-lattice piece")
    pg.add_argument("--k", type=int, required=True)
    pz = gsub.add_parser("zonotope", help="rhombically tiled regular 2k-gon")
    pz.add_argument("--k", type=int, required=True)
    pt = gsub.add_parser("triangle-free", help="n-vertex maximal triangle-free construction")
    pt.add_argument("--n", type=int, required=True)
    pd = gsub.add_parser("disk-lattice", help="flattened lattice strip in a disk")
    pd.add_argument("--r", type=float, required=True)
    pd.add_argument("--n", type=int, required=True)
    ps = gsub.add_parser("strip", help="chain of congruent rhombi")
    ps.add_argument("--count", type=int, required=True)
    ps.add_argument("--theta", type=float, required=True)
    ps.add_argument("--tilt", type=float, default=0.0)
    for p in (pg, pz, pt, pd, ps):
        p.add_argument("-o", "--output", required=True, metavar="FILE")

    pv = sub.add_parser("validate", help="run constraint checks on a graph file")
    pv.add_argument("file")
    pv.add_argument("--tol", type=float, default=1e-9,
                    help="unit-length tolerance (default 1e-9)")
    pv.add_argument("--triangle-free", action="store_true")
    pv.add_argument("--disk", type=float, metavar="R")

    pa = sub.add_parser("analyze", help="counting report for a graph file")
    pa.add_argument("file")
    pa.add_argument("--r", type=float, default=None)
    pa.add_argument("-o", "--output", metavar="REPORT.json")

    pr = sub.add_parser("reduce", help="strip triangular and fat rhombic faces")
    pr.add_argument("file")
    pr.add_argument("--r", type=float, required=True)
    pr.add_argument("-o", "--output", required=True, metavar="FILE")

    pe = sub.add_parser("extend-path", help="run the monotone-path search")
    pe.add_argument("file")
    pe.add_argument("--edge", type=int, nargs=2, required=True, metavar=("I", "J"))
    pe.add_argument("--r", type=float, required=True)
    pe.add_argument("-o", "--output", metavar="TRACE.json")

    psr = sub.add_parser("search", help="extremal search over candidate families")
    ssub = psr.add_subparsers(dest="mode", required=True)
    pp = ssub.add_parser("probe", help="best-known vs conjectured table")
    pp.add_argument("--n-max", type=int, required=True)
    pf = ssub.add_parser("family", help="run one family at one size")
    pf.add_argument("--name", required=True,
                    choices=("lattice_window", "zonotope_flips", "augmentation_variants"))
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    for p in (pp, pf):
        p.add_argument("-o", "--output", metavar="OUT.json")

    pren = sub.add_parser("render", help="render a graph file as SVG")
    pren.add_argument("file")
    pren.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    pren.add_argument("--faces", action="store_true", help="color faces by class")
    pren.add_argument("--disk", action="store_true", help="draw the disk outline")

    return ap


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _run(args) -> int:
    if args.command == "generate":
        if args.kind == "grid":
            g = gen_grid(args.k)
        elif args.kind == "zonotope":
            g = gen_zonotope(args.k)
        elif args.kind == "triangle-free":
            g = gen_triangle_free(args.n)
        elif args.kind == "disk-lattice":
            g, _params = gen_disk_lattice(args.r, args.n)
        else:
            g = gen_rhombus_strip(args.count, args.theta, args.tilt)
        save_graph(g, args.output)
        return 0

    if args.command == "validate":
        g = load_graph(args.file)
        pol = TolerancePolicy(unit_tol=args.tol, geom_tol=min(1e-12, args.tol / 10))
        checks = {"simple", "unit_lengths", "noncrossing"}
        disk = None
        if args.triangle_free:
            checks.add("triangle_free")
        if args.disk is not None:
            checks.add("disk_contained")
            center = g.disk.center if g.disk is not None else (0.0, 0.0)
            disk = DiskSpec(center, args.disk)
        rep = validate(g, pol, checks=checks, disk=disk)
        sys.stdout.write(json.dumps(rep.to_json_dict(), indent=2) + "\n")
        return 0 if rep.ok else 1

    if args.command == "analyze":
        g = load_graph(args.file)
        report = analyze(g, r=args.r)
        _emit(json.dumps(report.to_json_dict(), indent=2), args.output)
        return 0

    if args.command == "reduce":
        g = load_graph(args.file)
        trace = reduce_graph(g, args.r)
        save_graph(trace.after_fat_rhombi, args.output)
        sys.stdout.write(json.dumps(trace.to_json_dict(), indent=2) + "\n")
        return 0

    if args.command == "extend-path":
        g = load_graph(args.file)
        trace = extend_path(g, tuple(args.edge), args.r)
        _emit(json.dumps(trace.to_json_dict(), indent=2), args.output)
        return 0 if trace.found else 1

    if args.command == "search":
        if args.mode == "probe":
            rows = conjecture_probe(args.n_max)
            doc = {"n_max": args.n_max,
                   "rows": [row.to_json_dict() for row in rows]}
            _emit(json.dumps(doc, indent=2), args.output)
            return 0
        fam_kwargs = {}
        if args.name == "lattice_window":
            fam_kwargs["window"] = 5 if args.n <= 25 else None
        try:
            res = max_edges_over_family(
                CandidateFamily(args.name, **fam_kwargs), args.n, args.budget)
        except BudgetExceeded as exc:
            res = exc.result
        _emit(json.dumps(res.to_json_dict(), indent=2), args.output)
        return 0

    # render
    g = load_graph(args.file)
    fd = enumerate_faces(g) if args.faces else None
    style = RenderStyle(color_faces=args.faces, show_disk=args.disk)
    svg = render_svg(g, fd, style)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (MatchstickError, ValueError, OSError) as exc:
        sys.stderr.write(json.dumps(
            {"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
