"""Command-line driver.

Subcommands:

    color [--precolor FILE] [--validate] [--stats] INPUT
    check INPUT COLORING
    gen --kind K --size N --seed S [--delete P] [--out FILE]
    oracle INPUT
    bench --kind K --sizes LIST --seed S [--repeats R]

Exit codes: 0 success, 1 check/validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from pathlib import Path

from . import __version__
from .embedding import EmbeddingError, validate
from .generators import GenSpec, InvalidSpec, generate
from .graphio import (
    GraphSyntaxError, format_coloring, parse, parse_coloring, serialize,
)
from .multigram import KIND_ORDER
from .oracle import SimpleGraph, TooLarge, brute_force_3color, is_proper, is_triangle_free
from .solver import (
    ImproperPrecoloring, NotAFacialCycle, Solver, precolored_solver,
)


class _CliError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str):
    return parse(_read_text(path))


def _precolor_cycle(g, mapping: dict[int, int]) -> list[int]:
    """Recover the facial-cycle order from a precolor file's vertex set."""
    ids = set(mapping)
    if not 3 <= len(ids) <= 5:
        raise NotAFacialCycle(sorted(ids))
    v0 = min(ids)
    if not (0 <= v0 < len(g.v_alive) and g.v_alive[v0]):
        raise NotAFacialCycle(sorted(ids))
    for d in g.darts_at(v0):
        walk, closed = g.walk_face(d, 6)
        if not closed or len(walk) != len(ids):
            continue
        verts = [g.d_origin[e] for e in walk]
        if set(verts) == ids and len(set(verts)) == len(verts):
            return verts
    raise NotAFacialCycle(sorted(ids))


def _cmd_color(args) -> int:
    g = _load_graph(args.input)
    if args.validate:
        validate(g)
        if not is_triangle_free(SimpleGraph.from_plane_graph(g)):
            raise _CliError("input graph has a triangle")
    if args.precolor:
        phi = parse_coloring(_read_text(args.precolor))
        cycle = _precolor_cycle(g, phi)
        solver = precolored_solver(g, cycle, phi)
    else:
        solver = Solver(g)
    coloring = solver.run()
    sys.stdout.write(format_coloring(coloring))
    if args.stats:
        _print_stats(solver.run_statistics())
    return 0


def _print_stats(stats) -> None:
    kinds = " ".join(f"{k}={stats.reductions[k]}" for k in KIND_ORDER)
    sys.stderr.write(
        f"pops={stats.pops} insertions={stats.insertions} "
        f"removed={stats.vertices_removed} max_edge_close={stats.max_edge_close} "
        f"{kinds}\n")


def _cmd_check(args) -> int:
    g = _load_graph(args.input)
    coloring = parse_coloring(_read_text(args.coloring))
    sg = SimpleGraph.from_plane_graph(g)
    if is_proper(sg, coloring):
        return 0
    sys.stderr.write("improper or incomplete coloring\n")
    return 1


def _cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, size=args.size, seed=args.seed,
                   delete_prob=args.delete)
    g = generate(spec)
    text = serialize(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    sg = SimpleGraph.from_plane_graph(g)
    coloring = brute_force_3color(sg, cap=args.cap)
    if coloring is None:
        sys.stderr.write("not 3-colorable\n")
        return 1
    sys.stdout.write(format_coloring(coloring))
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(t) for t in args.sizes.split(",") if t]
    if not sizes:
        raise _CliError("empty size list")
    kinds_hdr = "\t".join(KIND_ORDER)
    sys.stdout.write(f"# n\tseconds\tinsertions\t{kinds_hdr}\n")
    for size in sizes:
        spec = GenSpec(kind=args.kind, size=size, seed=args.seed)
        g0 = generate(spec)
        times = []
        stats = None
        for _ in range(max(1, args.repeats)):
            g = g0.copy()
            solver = Solver(g)
            t0 = time.perf_counter()
            solver.run()
            times.append(time.perf_counter() - t0)
            stats = solver.run_statistics()
        med = statistics.median(times)
        kinds = "\t".join(str(stats.reductions[k]) for k in KIND_ORDER)
        sys.stdout.write(
            f"{g0.n_alive}\t{med:.6f}\t{stats.insertions}\t{kinds}\n")
        sys.stdout.flush()
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="tricolor",
        description="3-color triangle-free plane graphs in linear time")
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="3-color an embedded graph")
    p.add_argument("input")
    p.add_argument("--precolor", metavar="FILE",
                   help="'id color' lines covering one facial <=5-cycle")
    p.add_argument("--validate", action="store_true",
                   help="check the embedding and triangle-freeness first")
    p.add_argument("--stats", action="store_true",
                   help="print run statistics to stderr")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("check", help="verify a coloring file")
    p.add_argument("input")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="generate a triangle-free plane graph")
    p.add_argument("--kind", required=True,
                   choices=("grid", "quad", "augmented"))
    p.add_argument("--size", type=int, required=True,
                   help="target vertex count (grids round to a square)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--delete", type=float, default=0.0,
                   help="edge deletion probability (grid only)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force 3-coloring (small inputs)")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=30)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="scaling measurement on generated inputs")
    p.add_argument("--kind", required=True,
                   choices=("grid", "quad", "augmented"))
    p.add_argument("--sizes", required=True, help="comma-separated sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=_cmd_bench)
    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EmbeddingError, GraphSyntaxError, InvalidSpec, TooLarge,
            NotAFacialCycle, ImproperPrecoloring, _CliError,
            FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
