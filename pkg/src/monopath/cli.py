"""Command-line entry point: ``monopath <subcommand> [flags]``.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed on stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .extractor import (CaseExhausted, ExtractorParams, HypothesisViolated, ReductionFailed,
                        SparseCutWitness, extract_density, extract_min_degree, half_extract)
from .graph import (GENERATOR, Color, ColoredGraph, GraphFormatError, InvalidPath,
                    complete_graph, extremal_coloring, gnm, gnp, parse_edge_list,
                    write_edge_list)
from .oracle import (TooLarge, arrows, longest_mono_path_exact, longest_mono_path_heuristic,
                     longest_mono_path_naive)
from .regpipe import STRATEGIES, PipelineConfig, PipelineReport, color_graph, run_batch
from .splitter import PreconditionError, split

SCHEMA = "monopath-run/1"
DOMAIN_ERRORS = (GraphFormatError, InvalidPath, HypothesisViolated, CaseExhausted,
                 ReductionFailed, TooLarge, PreconditionError)


@dataclass
class RunRecord:
    subcommand: str
    params: dict
    seed: int | None
    generator: str = GENERATOR
    version: str = __version__
    schema: str = SCHEMA
    wall_time: float = 0.0
    output_digest: str = ""
    result: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph source (default: edge list on stdin)")
    g.add_argument("--input", help="edge-list file, '-' for stdin")
    g.add_argument("--n", type=int, help="generate a graph on n vertices")
    g.add_argument("--p", type=float, help="edge probability for G(n, p)")
    g.add_argument("--m", type=int, help="edge count for G(n, m)")
    g.add_argument("--extremal", action="store_true",
                   help="K_n with the extremal two-coloring")
    g.add_argument("--color", choices=("none", "uniform", "extremal", "greedy"), default=None,
                   help="recolor the generated graph (default: uniform, or none for gen)")
    g.add_argument("--seed", type=int, default=0)


def _generate(args) -> ColoredGraph:
    if args.extremal:
        return extremal_coloring(args.n)
    if args.p is not None and args.m is not None:
        raise UsageError("--p and --m are mutually exclusive")
    if args.p is not None:
        base = gnp(args.n, args.p, args.seed)
    elif args.m is not None:
        base = gnm(args.n, args.m, args.seed)
    else:
        base = complete_graph(args.n)
    scheme = args.color or ("none" if args.command == "gen" else "uniform")
    if scheme == "none":
        return base
    return color_graph(base, {"uniform": "random"}.get(scheme, scheme), args.seed)


def _load_graph(args) -> ColoredGraph:
    if args.n is not None:
        if args.input:
            raise UsageError("--input and --n are mutually exclusive")
        return _generate(args)
    if args.extremal or args.p is not None or args.m is not None:
        raise UsageError("generator flags need --n")
    if args.input and args.input != "-":
        with open(args.input) as fh:
            return parse_edge_list(fh)
    return parse_edge_list(sys.stdin)


def _seed_of(args) -> int | None:
    return getattr(args, "seed", None)


def _params(args) -> dict:
    skip = {"func", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip}


# subcommands


def cmd_gen(args, out) -> dict:
    if args.n is None:
        raise UsageError("gen needs --n")
    graph = _generate(args)
    write_edge_list(graph, out)
    return {"n": graph.n, "m": graph.m}


def cmd_split(args, out) -> dict:
    graph = _load_graph(args)
    color = {"all": None, "red": Color.RED, "blue": Color.BLUE}[args.split_color]
    cert = split(graph, color=color)
    U, W, spine = cert.U.tolist(), cert.W.tolist(), cert.spine.tolist()
    for row in (U, W, spine):
        out.write(" ".join(map(str, row)) + "\n")
    return {"U": U, "W": W, "spine": spine, "steps": cert.steps}


def cmd_extract(args, out) -> dict:
    graph = _load_graph(args)
    trace: list = []
    if args.mode == "half":
        got = half_extract(graph, args.alpha)
        if isinstance(got, SparseCutWitness):
            out.write("sparse-cut\n")
            out.write(" ".join(map(str, got.X)) + "\n")
            out.write(" ".join(map(str, got.Y)) + "\n")
            return {"outcome": "sparse_cut", "X": list(got.X), "Y": list(got.Y),
                    "params": {"alpha": args.alpha}}
        path, params = got, {"alpha": args.alpha}
    else:
        if args.k is None or args.l is None:
            raise UsageError("--k and --l are required for this mode")
        if args.mode == "mindeg":
            params_obj = ExtractorParams(args.k, args.l, args.epsilon)
            path = extract_min_degree(graph, params_obj, trace)
            params = params_obj.as_dict()
        else:
            path = extract_density(graph, args.k, args.l, args.epsilon, trace)
            params = {"k": args.k, "l": args.l, "epsilon": args.epsilon}
    out.write(f"{path.color.name.lower()} {path.length}\n")
    out.write(" ".join(map(str, path.vertices)) + "\n")
    return {**path.as_dict(), "params": params, "case_trace": trace}


def cmd_arrows(args, out) -> dict:
    graph = _load_graph(args)
    res = arrows(graph, args.a, args.b, workers=args.threads)
    out.write("true\n" if res.holds else "false\n")
    result = {"holds": res.holds, "nodes": res.nodes, "a": args.a, "b": args.b}
    if res.witness is not None:
        buf = io.StringIO()
        write_edge_list(res.witness, buf)
        out.write(buf.getvalue())
        result["witness"] = buf.getvalue()
    return result


def cmd_oracle(args, out) -> dict:
    graph = _load_graph(args)
    method = {"exact": longest_mono_path_exact, "naive": longest_mono_path_naive,
              "heuristic": lambda g: longest_mono_path_heuristic(g, seed=args.seed)}[args.method]
    path = method(graph)
    out.write(f"{path.color.name.lower()} {path.length}\n")
    out.write(" ".join(map(str, path.vertices)) + "\n")
    return {**path.as_dict(), "method": args.method}


def cmd_pipeline(args, out) -> dict:
    seeds = list(range(args.seed, args.seed + args.seeds))
    configs = [PipelineConfig(args.n, args.p, args.s, usable_threshold=args.usable_threshold,
                              alpha=args.alpha, epsilon=args.segment_epsilon, seed=s)
               for s in seeds]
    reports = run_batch(configs, args.strategy, workers=args.threads)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PipelineReport.CSV_COLUMNS)
    for r in reports:
        writer.writerow(r.csv_row())
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(PipelineReport.CSV_COLUMNS)
            for r in reports:
                w.writerow(r.csv_row())
    if args.detail_dir:
        d = Path(args.detail_dir)
        d.mkdir(parents=True, exist_ok=True)
        for r in reports:
            (d / f"run-{r.seed}.json").write_text(json.dumps(r.as_dict(), indent=2))
    return {"runs": [r.csv_row() for r in reports], "columns": list(PipelineReport.CSV_COLUMNS)}


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monopath",
                                     description="Long monochromatic paths in 2-colored graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            _add_graph_source(p)
        p.add_argument("--json", metavar="FILE", help="write a JSON run record")
        p.set_defaults(func=func)
        return p

    add("gen", cmd_gen, "write a generated graph as an edge list")

    p = add("split", cmd_split, "partition into two edge-free halves plus a spine")
    p.add_argument("--split-color", choices=("all", "red", "blue"), default="all",
                   help="restrict to one color class")

    p = add("extract", cmd_extract, "extract a long monochromatic path")
    p.add_argument("--k", type=int, help="red target (edges)")
    p.add_argument("--l", type=int, help="blue target (edges)")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--mode", choices=("mindeg", "density", "half"), default="mindeg")
    p.add_argument("--alpha", type=float, default=0.1, help="slack for --mode half")

    p = add("arrows", cmd_arrows, "decide G -> (P_a, P_b) exhaustively")
    p.add_argument("--a", type=int, required=True, help="red path order (vertices)")
    p.add_argument("--b", type=int, required=True, help="blue path order (vertices)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = add("oracle", cmd_oracle, "longest monochromatic path")
    p.add_argument("--method", choices=("exact", "naive", "heuristic"), default="exact")

    p = add("pipeline", cmd_pipeline, "random-graph pipeline runs, one CSV row each",
            graph=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--s", type=int, required=True, help="number of parts")
    p.add_argument("--strategy", choices=STRATEGIES, default="extremal")
    p.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds")
    p.add_argument("--seed", type=int, default=0, help="first seed")
    p.add_argument("--alpha", type=float, default=0.15)
    p.add_argument("--usable-threshold", type=float, default=0.5)
    p.add_argument("--segment-epsilon", type=float, default=None,
                   help="connector segment fraction (default 1/s)")
    p.add_argument("--csv", metavar="FILE", help="also write the CSV rows here")
    p.add_argument("--detail-dir", metavar="DIR", help="write one JSON detail file per run")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return parser


def main(argv: list[str] | None = None, stdout=None) -> int:
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buf = io.StringIO()
    t0 = time.perf_counter()
    try:
        result = args.func(args, buf)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"monopath: error: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = buf.getvalue()
    out.write(text)
    out.flush()
    if args.json:
        record = RunRecord(args.command, _params(args), _seed_of(args),
                           wall_time=time.perf_counter() - t0,
                           output_digest=hashlib.sha256(text.encode()).hexdigest(),
                           result=result)
        with open(args.json, "w") as fh:
            json.dump(asdict(record), fh, indent=2, default=str)
    return 0


def entry() -> None:
    sys.exit(main())
