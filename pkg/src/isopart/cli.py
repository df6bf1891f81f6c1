"""Command-line front end: verify, partition, iota, isomatic, sweep.

Exit codes: 0 success / PASS, 1 verification FAIL or sweep counterexample,
2 bad input or unmet hypothesis, 3 search budget exhausted, 4 construction gap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .clique_partition import partition_k_clique
from .cycle_partition import partition_cycle
from .errors import HypothesisError, ProofGapReport, SearchAborted
from .exact import DEFAULT_BUDGET, max_isomatic, min_isolating
from .formats import FormatError, parse_graph6, read_graphs
from .generate import LABELED_MAX_N, GraphFilter, enumerate_graphs, nonisomorphic_graphs
from .graph import Graph, bits
from .sweep import RunConfig, recheck_report, run_sweep, to_tsv, write_report
from .verify import Coloring, Target, verify_partition

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ABORT, EXIT_GAP = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _graphs(args) -> list[Graph]:
    try:
        if args.graph6:
            return [parse_graph6(args.graph6)]
        if args.input:
            if args.input == "-":
                return list(read_graphs(sys.stdin))
            with open(args.input) as fh:
                return list(read_graphs(fh))
    except FormatError as exc:
        raise InputError(f"cannot parse graph: {exc}") from exc
    except OSError as exc:
        raise InputError(str(exc)) from exc
    gen_n = getattr(args, "gen_n", None)
    if gen_n is not None:
        return _generated(args)
    raise InputError("no graph given; use --input, --graph6 or --gen-n")


def _generated(args) -> list[Graph]:
    flt = GraphFilter(connected=args.connected, max_degree=args.max_degree, claw_free=args.claw_free)
    if args.labeled:
        if not 1 <= args.gen_n <= LABELED_MAX_N:
            raise InputError(f"--labeled supports --gen-n up to {LABELED_MAX_N}")
        return [g for n in range(1, args.gen_n + 1) for g in enumerate_graphs(n, flt)]
    if args.gen_n < 1:
        raise InputError("--gen-n must be positive")
    layers = nonisomorphic_graphs(args.gen_n, flt)
    return [g for n in sorted(layers) for g in layers[n] if flt.accepts(g)]


def _target(args, default: Optional[str] = None) -> Target:
    text = args.target
    if text is None and getattr(args, "k", None) is not None:
        text = f"kclique:{args.k}"
    if text is None:
        text = default
    if text is None:
        raise InputError("no target given; use --target kclique:<k>|cycle|dominate|isolate")
    try:
        return Target.parse(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read_coloring(args, n: int) -> Coloring:
    try:
        if args.coloring:
            text = Path(args.coloring).read_text() if args.coloring != "-" else sys.stdin.read()
        elif args.colors:
            text = args.colors
        else:
            raise InputError("no colouring given; use --coloring <file> or --colors 1,2,...")
        text = text.strip()
        if text.startswith("{"):
            obj = json.loads(text)
            if "coloring" in obj:
                obj = obj["coloring"]
            colors = [int(c) for c in obj["colors"]]
            m = args.classes or int(obj.get("classes", max(colors)))
        else:
            colors = [int(tok) for tok in text.replace(",", " ").split()]
            m = args.classes or max(colors, default=1)
        if len(colors) != n:
            raise InputError(f"colouring has {len(colors)} entries, graph has {n} vertices")
        return Coloring(tuple(colors), m)
    except (ValueError, KeyError, OSError) as exc:
        raise InputError(f"cannot read colouring: {exc}") from exc


def cmd_verify(args) -> int:
    graphs = _graphs(args)
    if len(graphs) != 1:
        raise InputError(f"verify takes exactly one graph, got {len(graphs)}")
    g = graphs[0]
    target = _target(args)
    coloring = _read_coloring(args, g.n)
    cert = verify_partition(g, coloring, target)
    _emit(cert.to_json())
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_partition(args) -> int:
    status = EXIT_OK
    for g in _graphs(args):
        try:
            if args.mode == "cycle":
                coloring, target = partition_cycle(g), Target.cycle()
            else:
                if args.k is None:
                    raise InputError("--mode clique needs --k")
                coloring, target = partition_k_clique(g, args.k), Target.clique(args.k)
        except HypothesisError as exc:
            print(f"hypothesis violated ({exc.hypothesis}): {exc}", file=sys.stderr)
            return EXIT_INPUT
        except ProofGapReport as exc:
            print(f"construction gap: {exc}", file=sys.stderr)
            return EXIT_GAP
        cert = verify_partition(g, coloring, target)
        _emit({"coloring": coloring.to_json(), "certificate": cert.to_json()})
        if not cert.passed:
            status = EXIT_FAIL
    return status


def cmd_iota(args) -> int:
    target = _target(args)
    for g in _graphs(args):
        try:
            res = min_isolating(g, target, args.budget)
        except SearchAborted as exc:
            _emit({"status": "ABORTED", "reason": str(exc), "target": str(target)})
            return EXIT_ABORT
        _emit({"status": "OK", "value": res.value, "witness": list(bits(res.witness)), "target": str(target)})
    return EXIT_OK


def cmd_isomatic(args) -> int:
    target = _target(args)
    for g in _graphs(args):
        try:
            res = max_isomatic(g, target, args.budget)
        except SearchAborted as exc:
            _emit({"status": "ABORTED", "reason": str(exc), "target": str(target)})
            return EXIT_ABORT
        _emit({
            "status": "OK",
            "value": res.value,
            "unbounded": res.unbounded,
            "witness": res.witness.to_json(),
            "target": str(target),
        })
    return EXIT_OK


def cmd_sweep(args) -> int:
    graphs = _graphs(args)
    source = args.input or args.graph6 or (
        f"gen n<={args.gen_n} connected={args.connected} max_degree={args.max_degree} "
        f"claw_free={args.claw_free} labeled={args.labeled}"
    )
    try:
        ks = tuple(int(k) for k in args.ks.split(",")) if args.ks else ((args.k,) if args.k else (3,))
        cfg = RunConfig(
            checks=tuple(c.strip() for c in args.checks.split(",")),
            ks=ks,
            budget=args.budget,
            jobs=args.jobs,
            out=args.out,
            source=source,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = run_sweep(graphs, cfg)
    bad = recheck_report(report)
    if bad:
        print(f"soundness gate: {len(bad)} witnesses did not re-verify: {bad[:5]}", file=sys.stderr)
    cex = write_report(report, args.out)
    if args.out is None:
        if args.format == "tsv":
            sys.stdout.write(to_tsv(report))
        else:
            print(json.dumps(report, indent=1, sort_keys=True))
    elif args.format == "tsv":
        Path(args.out).with_suffix(".tsv").write_text(to_tsv(report))
    for line in report["summary"]:
        print(line, file=sys.stderr)
    if cex is not None:
        print("=" * 72, file=sys.stderr)
        print(f"COUNTEREXAMPLES FOUND: {len(report['counterexamples'])}, written to {cex}", file=sys.stderr)
        print("=" * 72, file=sys.stderr)
        return EXIT_FAIL
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isopart", description="Isolating sets and isolating partitions of small graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp, generate=False):
        sp.add_argument("--input", help="file with graph6 lines or one edge list ('-' for stdin)")
        sp.add_argument("--graph6", help="a single graph6 string")
        if generate:
            sp.add_argument("--gen-n", type=int, help="generate every graph up to this order")
            sp.add_argument("--labeled", action="store_true", help="all labelled graphs instead of one per isomorphism class")
            sp.add_argument("--connected", action="store_true")
            sp.add_argument("--max-degree", type=int)
            sp.add_argument("--claw-free", action="store_true")

    sp = sub.add_parser("verify", help="check that every class of a colouring is isolating")
    graph_input(sp)
    sp.add_argument("--target")
    sp.add_argument("--k", type=int)
    sp.add_argument("--coloring", help="JSON {colors, classes} or whitespace/comma separated colours")
    sp.add_argument("--colors", help="inline colours, e.g. 1,2,3,4")
    sp.add_argument("--classes", type=int, help="number of classes m (default: largest colour)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("partition", help="build a verified isolating partition")
    graph_input(sp)
    sp.add_argument("--mode", choices=["clique", "cycle"], required=True)
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_partition)

    for name, func, help_ in (
        ("iota", cmd_iota, "minimum isolating set"),
        ("isomatic", cmd_isomatic, "maximum number of classes in an isolating partition"),
    ):
        sp = sub.add_parser(name, help=help_)
        graph_input(sp)
        sp.add_argument("--target")
        sp.add_argument("--k", type=int)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.set_defaults(func=func)

    sp = sub.add_parser("sweep", help="run bound, construction and conjecture checks over many graphs")
    graph_input(sp, generate=True)
    sp.add_argument("--checks", default="all", help="comma list of check names or groups: bounds, partitions, conjectures, all")
    sp.add_argument("--k", type=int)
    sp.add_argument("--ks", help="comma list of clique sizes, e.g. 3,4")
    sp.add_argument("--target", help=argparse.SUPPRESS)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["json", "tsv"], default="json")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        # reader went away (e.g. `| head`); keep the interpreter from complaining on exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
