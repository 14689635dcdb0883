"""``unfoldium`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical or
verification failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

from . import render
from . import symmetry as sym
from .graph_core import (
    BUNDLED_GRAPHS,
    EdgeParseError,
    count_spanning_trees_matrix_tree,
    cube_graph,
    enumerate_spanning_trees,
    format_edge,
    format_edge_set,
    parse_edge_set,
    tree_violation,
)
from .unfold import canonical_form, classify_shapes, layout
from .verify import BAD_GENERATORS, SCHEMA, run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _color(text: str, code: str) -> str:
    if os.environ.get("NO_COLOR") is not None or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _emit_json(payload: dict[str, Any]) -> None:
    print(json.dumps({"schema": SCHEMA, **payload}, indent=2))


def cmd_count_trees(args: argparse.Namespace) -> int:
    g = BUNDLED_GRAPHS[args.graph]()
    det = count_spanning_trees_matrix_tree(g)
    enumerated = len(enumerate_spanning_trees(g))
    agree = det == enumerated
    if args.json:
        _emit_json({"command": "count-trees", "graph": args.graph, "matrix_tree": det,
                    "enumerated": enumerated, "agree": agree})
    else:
        print(f"matrix_tree={det} enumerated={enumerated}")
        if not agree:
            print("count mismatch", file=sys.stderr)
    return EXIT_OK if agree else EXIT_MATH


def cmd_burnside(args: argparse.Namespace) -> int:
    group = sym.full_group()
    trees = enumerate_spanning_trees(cube_graph())
    rows = sym.fixed_table(group, trees)
    total = sum(r.total for r in rows)
    count, rem = divmod(total, len(group))
    if args.json:
        _emit_json({
            "command": "burnside",
            "classes": [
                {"class": r.klass.value, "elements": r.elements,
                 "fixed_per_element": list(r.fixed_per_element), "fixed_total": r.total}
                for r in rows
            ],
            "group_order": len(group),
            "burnside_sum": total,
            "orbit_count": count if rem == 0 else None,
        })
    else:
        print(f"{'class':<10} {'elements':>8} {'fixed each':>10} {'subtotal':>9}")
        for r in rows:
            each = str(r.fixed_per_element[0]) if r.constant else "/".join(map(str, r.fixed_per_element))
            print(f"{r.klass.value:<10} {r.elements:>8} {each:>10} {r.total:>9}")
        print(f"burnside_sum={total} group_order={len(group)}")
        if rem == 0:
            print(f"orbits={count}")
    if rem:
        print(f"Burnside sum {total} not divisible by {len(group)}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace) -> int:
    g = cube_graph()
    group = sym.full_group()
    report = sym.compute_orbits(group, enumerate_spanning_trees(g))
    orbits = []
    for i, orbit in enumerate(report.orbits, start=1):
        rep = orbit[0]
        shape = canonical_form(layout(rep))
        orbits.append({
            "id": i,
            "size": len(orbit),
            "stabilizer_order": len(group) // len(orbit),
            "representative": format_edge_set(g, rep),
            "shape": [list(c) for c in shape.cells],
        })
    if args.json:
        _emit_json({"command": "orbits", "orbit_count": len(orbits),
                    "burnside_value": report.burnside_value, "orbits": orbits})
    else:
        for o in orbits:
            print(f"orbit {o['id']:>2}  size={o['size']:<3} stab={o['stabilizer_order']}  {o['representative']}")
        print(f"orbits={len(orbits)} burnside={report.burnside_value}")
    return EXIT_OK if len(orbits) == report.burnside_value else EXIT_MATH


def cmd_unfold(args: argparse.Namespace) -> int:
    g = cube_graph()
    try:
        cut = parse_edge_set(g, args.tree)
    except EdgeParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    problem = tree_violation(g, cut)
    if problem:
        print(f"not a spanning tree: {problem}", file=sys.stderr)
        return EXIT_MATH
    net = layout(cut)
    shape = canonical_form(net)
    report = sym.compute_orbits(sym.full_group(), enumerate_spanning_trees(g))
    orbit = report.orbit_of(cut)
    art = render.ascii_art(net)
    if args.json:
        _emit_json({
            "command": "unfold",
            "tree": format_edge_set(g, cut),
            "placements": {f.name: list(c) for f, c in net.placements.items()},
            "corners": {f.name: {str(v): list(p) for v, p in sorted(cm.items())}
                        for f, cm in net.corner_map.items()},
            "hinges": [{"faces": [a.name, b.name], "edge": format_edge(e)} for a, b, e in net.hinges],
            "shape": [list(c) for c in shape.cells],
            "orbit_representative": format_edge_set(g, orbit[0]),
            "orbit_size": len(orbit),
            "ascii": art.splitlines(),
        })
    else:
        print(f"tree: {format_edge_set(g, cut)}")
        print("placements:")
        for f, (x, y) in net.placements.items():
            print(f"  {f.name:<6} ({x}, {y})")
        print("hinges:")
        for a, b, e in net.hinges:
            print(f"  {a.name}-{b.name} via {format_edge(e)}")
        print("shape:")
        print("  " + shape.to_text().replace("\n", "\n  "))
        print(f"orbit representative: {format_edge_set(g, orbit[0])} (orbit size {len(orbit)})")
        print(art)
    return EXIT_OK


def cmd_shapes(args: argparse.Namespace) -> int:
    g = cube_graph()
    shapes = classify_shapes(enumerate_spanning_trees(g), mirror=not args.one_sided)
    index = []
    for i, (shape, trees) in enumerate(shapes.items(), start=1):
        index.append({
            "id": i,
            "file": f"shape_{i:02d}.svg" if args.render == "svg" else None,
            "cells": [list(c) for c in shape.cells],
            "tree_count": len(trees),
            "representative": format_edge_set(g, trees[0]),
        })
    payload = {"command": "shapes", "mirror_identified": not args.one_sided,
               "shape_count": len(index), "total_trees": sum(e["tree_count"] for e in index),
               "shapes": index}

    if args.render == "svg":
        out_dir = Path(args.out_dir)
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            for entry, shape in zip(index, shapes):
                (out_dir / entry["file"]).write_text(
                    render.svg(shape, title=f"cube net {entry['id']}"), encoding="utf-8")
            (out_dir / "index.json").write_text(
                json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"cannot write to {out_dir}: {exc}", file=sys.stderr)
            return EXIT_IO

    if args.json:
        _emit_json(payload)
    elif args.render == "ascii":
        for entry, shape in zip(index, shapes):
            print(f"shape {entry['id']:02d}  trees={entry['tree_count']}  e.g. {entry['representative']}")
            print(render.ascii_art(shape))
            print()
    else:
        print(f"wrote {len(index)} SVG files and index.json to {args.out_dir}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    generators = BAD_GENERATORS if args.inject_bad_generator else sym.GENERATORS
    report = run_verification(generators)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for c in report.checks:
            mark = _color("PASS", "32") if c.passed else _color("FAIL", "31")
            print(f"[{mark}] {c.check_id:>2} {c.name}: {c.description}")
            if not c.passed:
                print(f"       expected: {c.expected}")
                print(f"       actual:   {c.actual}")
        print(f"summary: {report.summary}")
    return EXIT_OK if report.ok else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unfoldium", description="Edge unfoldings of the cube, counted and drawn.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count-trees", help="Matrix-Tree count vs. exhaustive enumeration")
    p.add_argument("--graph", choices=sorted(BUNDLED_GRAPHS), default="cube")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count_trees)

    p = sub.add_parser("burnside", help="fixed-tree table and Burnside orbit count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_burnside)

    p = sub.add_parser("orbits", help="orbits of spanning trees under the cube group")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("unfold", help="lay out the net cut along a spanning tree")
    p.add_argument("tree", help='cut edges, e.g. "1-5,2-6,3-7,4-8,5-6,6-7,7-8"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("shapes", help="the incongruent nets")
    p.add_argument("--render", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out-dir", default="shapes")
    p.add_argument("--one-sided", action="store_true", help="do not identify mirror images")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_shapes)

    p = sub.add_parser("verify", help="recompute every claim and report pass/fail")
    p.add_argument("--json", action="store_true")
    p.add_argument("--inject-bad-generator", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
