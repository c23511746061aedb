"""Command-line entry point: solve, gen, oracle, bench."""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from .errors import NoNontrivialCycle, SurfaceError
from .generators import grid_torus, schema_surface
from .oracle import NONCONTRACTIBLE, NONSEPARATING, OBJECTIVES, exhaustive_both, per_vertex_both
from .render import render_svg
from .solver import solve
from .surface import format_decimal, load_surf, serialize

EXIT_OK, EXIT_ERROR, EXIT_NO_CYCLE = 0, 1, 2
NAMES = {NONCONTRACTIBLE: "noncontractible", NONSEPARATING: "nonseparating"}


def _objectives(flag: str) -> tuple[str, ...]:
    return OBJECTIVES if flag == "both" else (flag,)


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    surface = load_surf(args.file)
    objectives = _objectives(args.objective)
    try:
        result = solve(surface, objectives)
    except NoNontrivialCycle as exc:
        if args.json:
            doc = {"genus": surface.genus, "boundaries": surface.boundary_count}
            doc.update({NAMES[o]: None for o in objectives})
            _write(args.json, json.dumps(doc, indent=2) + "\n")
        print(f"no non-trivial cycle: {exc}", file=sys.stderr)
        return EXIT_NO_CYCLE
    doc = result.to_json(include_time=not args.no_time)
    if args.json:
        _write(args.json, json.dumps(doc, indent=2) + "\n")
    if args.json != "-":
        s = result.stats
        print(f"genus {s.genus}, boundaries {s.boundaries}")
        for o in objectives:
            r = result.results[o]
            if r is None:
                print(f"{NAMES[o]}: none")
                continue
            verts = " ".join(map(str, r.vertices))
            print(f"{NAMES[o]}: length {format_decimal(r.length)} ({r.cls.value}) via {verts}")
        print(f"meta words {s.meta_words}, cylinders {s.cylinders}, "
              f"candidates {s.candidates}, {s.time_ms:.1f} ms")
    if args.render:
        cycles = [(f"{NAMES[o]} ({format_decimal(r.length)})", r.vertices)
                  for o, r in result.results.items() if r is not None]
        _write(args.render, render_svg(surface, cycles))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "grid-torus":
        s = grid_torus(args.rows, args.cols, args.weights, args.seed, args.lo, args.hi)
        comment = f"grid torus {args.rows}x{args.cols}, {args.weights} weights"
    else:
        s = schema_surface(args.genus, args.subdiv, args.weights, args.seed, args.lo, args.hi)
        comment = f"genus-{args.genus} schema, {args.subdiv} subdivision points per side"
    if args.weights == "random":
        comment += f" (seed {args.seed}, range {args.lo}..{args.hi})"
    _write(args.output, serialize(s, comment))
    return EXIT_OK


def cmd_oracle(args) -> int:
    surface = load_surf(args.file)
    if surface.genus == 0 and surface.is_closed:
        print("no non-trivial cycle: genus 0", file=sys.stderr)
        return EXIT_NO_CYCLE
    if args.mode == "exhaustive":
        res = exhaustive_both(surface, max_edges=args.max_edges)
    else:
        res = per_vertex_both(surface)
    for o in _objectives(args.objective):
        r = res[o]
        if r is None:
            print(f"{NAMES[o]}: none")
            continue
        verts = " ".join(str(surface.origin[h]) for h in r.half_edges)
        length = format_decimal(Fraction(r.length, surface.scale))
        print(f"{NAMES[o]}: length {length} ({r.cls.value}) via {verts}")
    return EXIT_OK


def cmd_bench(args) -> int:
    rows = []
    n = args.min
    prev = None
    while n <= args.max:
        if args.family == "grid-torus":
            s = grid_torus(n, n)
        else:
            s = schema_surface(args.genus, n)
        best = min(_timed(s) for _ in range(args.repeat))
        ratio = "" if prev is None else f"{best / prev:.3f}"
        rows.append([args.family, n, s.n_edges, s.genus, f"{best:.4f}", ratio])
        print(f"n={n} edges={s.n_edges} {best:.3f}s {ratio}", file=sys.stderr)
        prev = best
        n *= 2
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="", encoding="utf-8")
    try:
        w = csv.writer(out)
        w.writerow(["family", "n", "edges", "genus", "seconds", "ratio"])
        w.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def _timed(surface) -> float:
    t0 = time.perf_counter()
    solve(surface)
    return time.perf_counter() - t0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="surfcycles",
                                description="Shortest non-contractible and non-separating "
                                            "cycles on combinatorial surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve a .surf file")
    sp.add_argument("file")
    sp.add_argument("--objective", choices=["nc", "ns", "both"], default="both")
    sp.add_argument("--json", metavar="OUT", help="write JSON here ('-' for stdout)")
    sp.add_argument("--render", metavar="OUT.svg", help="write an SVG drawing")
    sp.add_argument("--no-time", action="store_true", help="omit time_ms from the JSON")
    sp.set_defaults(func=cmd_solve)

    gp = sub.add_parser("gen", help="generate a surface file")
    gsub = gp.add_subparsers(dest="kind", required=True)
    for name in ("grid-torus", "schema"):
        g = gsub.add_parser(name)
        if name == "grid-torus":
            g.add_argument("--rows", type=int, required=True)
            g.add_argument("--cols", type=int, required=True)
        else:
            g.add_argument("--genus", type=int, required=True)
            g.add_argument("--subdiv", type=int, required=True)
        g.add_argument("--weights", choices=["unit", "random"], default="unit")
        g.add_argument("--seed", type=int, default=0)
        g.add_argument("--lo", type=int, default=1)
        g.add_argument("--hi", type=int, default=9)
        g.add_argument("-o", "--output", default="-")
        g.set_defaults(func=cmd_gen)

    op = sub.add_parser("oracle", help="run a reference solver")
    op.add_argument("file")
    op.add_argument("--mode", choices=["exhaustive", "loops"], default="loops")
    op.add_argument("--objective", choices=["nc", "ns", "both"], default="both")
    op.add_argument("--max-edges", type=int, default=150)
    op.set_defaults(func=cmd_oracle)

    bp = sub.add_parser("bench", help="time solve over doubling sizes")
    bp.add_argument("--family", choices=["grid-torus", "schema"], default="grid-torus")
    bp.add_argument("--genus", type=int, default=2, help="genus for the schema family")
    bp.add_argument("--min", type=int, default=10)
    bp.add_argument("--max", type=int, default=160)
    bp.add_argument("--repeat", type=int, default=3)
    bp.add_argument("--out", default="-")
    bp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NoNontrivialCycle as exc:
        print(f"no non-trivial cycle: {exc}", file=sys.stderr)
        return EXIT_NO_CYCLE
    except (SurfaceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
