"""Command-line front end: ``chibound {gen,verify,tight,lemma,witness}``.

Exit codes: 0 when everything checked out, 1 when a violation or claim
mismatch was found, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Iterator, Sequence, TextIO

from . import generate, lemma, verify, witnesses
from .graph import Graph
from .graph6 import Graph6Error, read_graph6, to_graph6
from .parallel import default_workers

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _workers(args: argparse.Namespace) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.threads
    try:
        return default_workers()
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _class(args: argparse.Namespace) -> verify.GraphClass:
    try:
        return verify.get_class(args.cls)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _input_graphs(args: argparse.Namespace, cap: int) -> Iterator[Graph]:
    if (args.max_n is None) == (args.input is None):
        raise UsageError("give exactly one of --max-n or --input")
    if args.input is not None:
        if args.input == "-":
            return read_graph6(sys.stdin.buffer)
        return read_graph6(args.input)
    if not 1 <= args.max_n <= cap:
        raise UsageError(f"--max-n must be in 1..{cap}")
    return generate.graphs_up_to(args.max_n)


@contextlib.contextmanager
def _sink(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _say(args: argparse.Namespace, line: str) -> None:
    # keep stdout clean for the report when it goes there
    stream = sys.stdout if args.output not in (None, "-") else sys.stderr
    print(line, file=stream)


def cmd_gen(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= generate.MAX_GENERATED:
        raise UsageError(f"n must be in 1..{generate.MAX_GENERATED}")
    workers = _workers(args)
    out = sys.stdout.buffer if args.output in (None, "-") else open(args.output, "wb")
    try:
        for g in generate.all_graphs(args.n, workers):
            out.write(to_graph6(g) + b"\n")
        out.flush()
    finally:
        if out is not sys.stdout.buffer:
            out.close()
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cls = _class(args)
    graphs = _input_graphs(args, cap=10)
    report = verify.verify_class(cls, graphs, _workers(args))
    with _sink(args.output) as fh:
        verify.write_records(report.records, fh, args.format)
    _say(args, report.summary())
    return EXIT_FAIL if report.violations else EXIT_OK


def cmd_tight(args: argparse.Namespace) -> int:
    cls = _class(args)
    if not 1 <= args.max_n <= 10:
        raise UsageError("--max-n must be in 1..10")
    found = verify.find_tight(cls, args.max_n, _workers(args))
    with _sink(args.output) as fh:
        for g6 in found:
            fh.write(g6 + "\n")
    _say(args, f"class={cls.id} max_n={args.max_n} tight={len(found)}")
    return EXIT_OK


def cmd_lemma(args: argparse.Namespace) -> int:
    workers = _workers(args)
    if args.input is not None and args.max_n is None:
        graphs = [g for g in _input_graphs(args, cap=9) if lemma.is_critical_chair_free(g)]
    elif args.input is None and args.max_n is not None:
        if not 1 <= args.max_n <= 9:
            raise UsageError("--max-n must be in 1..9")
        graphs = list(lemma.critical_chair_free_stream(args.max_n, workers))
    else:
        raise UsageError("give exactly one of --max-n or --input")
    results = lemma.run_lemma(graphs, args.lemma_order, workers)
    bad = [r for r in results if not r.ok]
    with _sink(args.output) as fh:
        for r in results:
            fh.write(r.to_json() + "\n")
    _say(
        args,
        f"lemma graphs={len(results)} contexts={sum(r.contexts for r in results)} "
        f"violations={len(bad)} order={args.lemma_order}",
    )
    return EXIT_FAIL if bad else EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    names = list(witnesses.CLAIMS) if args.name == "all" else [args.name]
    if any(n not in witnesses.CLAIMS for n in names):
        raise UsageError(f"unknown witness {args.name!r}; known: {', '.join(witnesses.CLAIMS)}, all")
    reports = [witnesses.witness_report(n) for n in names]
    if args.output is not None:
        with _sink(args.output) as fh:
            for r in reports:
                fh.write(r.to_json() + "\n")
    for r in reports:
        print(r.summary())
        for m in r.mismatches:
            print(f"  mismatch: {m}")
    return EXIT_OK if all(r.claims_ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chibound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", "-o", help="output path (default: stdout)")
        p.add_argument("--threads", type=int, help="worker processes (default: $CHI_THREADS or CPU count)")

    p = sub.add_parser("gen", help="write all graphs on N vertices as graph6")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a class's chi-bound over a graph stream")
    p.add_argument("--class", dest="cls", required=True, help="class id or registry number")
    p.add_argument("--max-n", type=int, help="generate all graphs on 1..N vertices")
    p.add_argument("--input", help="graph6 file ('-' for stdin)")
    p.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tight", help="list class members attaining the bound")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_tight)

    p = sub.add_parser("lemma", help="check the neighbourhood clauses on critical Chair-free graphs")
    p.add_argument("--max-n", type=int)
    p.add_argument("--input", help="graph6 file ('-' for stdin); non-qualifying graphs are skipped")
    p.add_argument("--lemma-order", choices=lemma.ORDERINGS, default="sorted")
    common(p)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("witness", help="recompute a necessity witness and compare with its claims")
    p.add_argument("name", help=f"one of {', '.join(witnesses.CLAIMS)}, all")
    p.add_argument("--output", "-o", help="also write the JSON report here")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"chibound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, OSError) as exc:
        print(f"chibound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
