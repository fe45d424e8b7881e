"""Command-line interface.

Data goes to stdout (JSON or an edge list), diagnostics to stderr.

Exit status: 0 success or property holds; 1 negative result (stuck, failed
verification, minor found, bound violated); 2 usage or input error;
3 search budget or size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Optional, Sequence

from . import __version__
from .engine import DEFAULT_C, ParameterError, Stuck, defective_coloring, make_params, verify_partition
from .extremal import density_bound_holds
from .graph import (
    DEFAULT_MAX_VERTICES,
    Graph,
    GraphError,
    SizeGuardError,
    construct_sharp,
    format_edge_list,
    gen_forest,
    gen_grid,
    gen_ktree,
    gen_random,
    parse_edge_list,
)
from .oracle import DEFAULT_BUDGET, DEFAULT_DEFECT_CAP, OracleGuardError, has_clique_minor, min_defect

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

DENSITY_HELP = (
    "assert that every minor of the input has at most D*|V| edges and use D in place of "
    "C(t+1)sqrt(ln(t+1)); e.g. 1 for forests, 3 for planar graphs, k for partial k-trees. "
    "The guarantee is only as good as this claim."
)


class UsageError(Exception):
    pass


def _read_graph(path: str, stdin: IO[str]) -> Graph:
    if path == "-":
        return parse_edge_list(stdin)
    try:
        with open(path, "rb") as fh:
            return parse_edge_list(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(out: IO[str], payload: dict, fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for key in sorted(payload):
            out.write(f"{key}: {json.dumps(payload[key])}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minorcolor",
        description="Defective t-colouring of graphs with no K_{t+1} minor, with exact small-graph oracles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "text"), default="json", help="report format (default json)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def density_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("-t", type=int, required=True, help="forbidden clique minor is K_{t+1}")
        p.add_argument("-C", type=float, default=DEFAULT_C, help=f"density constant (default {DEFAULT_C:g})")
        p.add_argument("--density-override", type=float, metavar="D", help=DENSITY_HELP)

    p = sub.add_parser("params", help="print r and s for given t")
    density_opts(p)

    p = sub.add_parser("color", help="partition a graph into t parts of bounded induced degree")
    density_opts(p)
    p.add_argument(
        "--s-override",
        type=int,
        metavar="S",
        help="UNSAFE: force the degree bound s; small values make peeling get stuck on purpose",
    )
    p.add_argument("file", help="edge-list file, or - for stdin")

    p = sub.add_parser("verify", help="check a partition JSON against a graph")
    p.add_argument("-s", type=int, required=True, help="every part must induce maximum degree < s")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("partfile", help="JSON with a 'parts' list, as written by 'color'")

    p = sub.add_parser("sharp", help="emit the sharpness graph G(s,t) as an edge list")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)

    p = sub.add_parser("minor", help="exact K_k minor search (exit 1 if a minor is found)")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search-node expansion limit")
    p.add_argument("file", help="edge-list file, or - for stdin")

    p = sub.add_parser("oracle", help="exact minimum defect over partitions into P parts")
    p.add_argument("-p", type=int, required=True, help="number of parts")
    p.add_argument("--max-vertices", type=int, default=DEFAULT_DEFECT_CAP)
    p.add_argument("file", help="edge-list file, or - for stdin")

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    kinds = p.add_subparsers(dest="family", required=True, metavar="FAMILY")
    q = kinds.add_parser("forest")
    q.add_argument("n", type=int)
    q.add_argument("--seed", type=int, default=0)
    q = kinds.add_parser("ktree")
    q.add_argument("n", type=int)
    q.add_argument("k", type=int)
    q.add_argument("--seed", type=int, default=0)
    q = kinds.add_parser("grid")
    q.add_argument("w", type=int)
    q.add_argument("h", type=int)
    q = kinds.add_parser("random")
    q.add_argument("n", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("density-check", help="compare |E| with C(t+1)sqrt(ln(t+1))|V|")
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-C", type=float, default=DEFAULT_C)
    p.add_argument("file", help="edge-list file, or - for stdin")
    return parser


def _run(args: argparse.Namespace, out: IO[str], err: IO[str], stdin: IO[str]) -> int:
    fmt = args.format
    cmd = args.command

    if cmd == "params":
        params = make_params(args.t, args.C, args.density_override)
        _emit(out, {"t": params.t, "r": params.r, "s": params.s}, fmt)
        return EXIT_OK

    if cmd == "color":
        g = _read_graph(args.file, stdin)
        if args.s_override is not None:
            err.write("warning: --s-override bypasses the computed bound\n")
        result = defective_coloring(g, args.t, args.C, args.density_override, args.s_override)
        if isinstance(result, Stuck):
            _emit(out, result.as_dict(), fmt)
            err.write(f"stuck with {result.remaining.num_vertices} vertices left\n")
            return EXIT_NEGATIVE
        _emit(out, result.as_dict(), fmt)
        return EXIT_OK

    if cmd == "verify":
        g = _read_graph(args.file, stdin)
        try:
            with open(args.partfile) as fh:
                parts = json.load(fh)["parts"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read partition from {args.partfile}: {exc}") from None
        report = verify_partition(g, parts, args.s)
        _emit(out, report.as_dict(), fmt)
        return EXIT_OK if report.ok else EXIT_NEGATIVE

    if cmd == "sharp":
        out.write(format_edge_list(construct_sharp(args.s, args.t, args.max_vertices)))
        return EXIT_OK

    if cmd == "minor":
        g = _read_graph(args.file, stdin)
        result = has_clique_minor(g, args.k, args.budget)
        _emit(out, {"k": args.k, **result.as_dict()}, fmt)
        if result.status == "timeout":
            err.write(f"budget of {args.budget} expansions exhausted\n")
            return EXIT_GUARD
        return EXIT_NEGATIVE if result.found else EXIT_OK

    if cmd == "oracle":
        g = _read_graph(args.file, stdin)
        d = min_defect(g, args.p, args.max_vertices)
        _emit(out, {"parts": args.p, "min_defect": d}, fmt)
        return EXIT_OK

    if cmd == "gen":
        if args.family == "forest":
            g = gen_forest(args.n, args.seed)
        elif args.family == "ktree":
            g = gen_ktree(args.n, args.k, args.seed)
        elif args.family == "grid":
            g = gen_grid(args.w, args.h)
        else:
            g = gen_random(args.n, args.p, args.seed)
        out.write(format_edge_list(g))
        return EXIT_OK

    if cmd == "density-check":
        g = _read_graph(args.file, stdin)
        check = density_bound_holds(g, args.t, args.C)
        _emit(out, {"t": args.t, "C": args.C, **check.as_dict()}, fmt)
        return EXIT_OK if check.holds else EXIT_NEGATIVE

    raise UsageError(f"unknown command {cmd}")


def main(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
    stdin: Optional[IO[str]] = None,
) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    inp = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out, err, inp)
    except (SizeGuardError, OracleGuardError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_GUARD
    except (UsageError, GraphError, ParameterError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
