"""``sigenum`` command line.

Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 resource
guard tripped, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Callable, Iterator, Optional

from . import __version__
from .bounded_cooc import enumerate_bounded_cooc
from .bounded_dim import DEFAULT_MAX_CORE_VARS, enumerate_bounded_dim
from .errors import DimacsError, EngineMismatchError, InvariantViolation, ResourceLimitError, SigenumError
from .extremal import enumerate_minimal_signatures, maximal_filter
from .flashlight import enumerate_flashlight
from .formula import Cnf, format_bits, is_horn, is_monotone, normalize, parse_dimacs, stats
from .graphs import conflict_graph, dual_graph
from .instrument import WorkMeter
from .oracle import brute_force_signatures
from .sat import SatOracle, classify, engine_for
from .unions import monotone_signatures

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_RESOURCE, EXIT_INTERNAL = range(5)
ALGOS = ("auto", "brute", "flashlight", "bounded-dim", "bounded-cooc", "monotone")


class UsageError(SigenumError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="DIMACS CNF file, or - for standard input")
    common.add_argument("--algo", choices=ALGOS, default="auto")
    common.add_argument("--engine", choices=("auto", "two-sat", "horn", "dpll"), default="auto")
    common.add_argument("--witness", action="store_true", help="print a witness assignment per signature")
    common.add_argument("--format", choices=("bits", "jsonl"), default="bits")
    common.add_argument("--max-outputs", type=int, default=None, metavar="N")
    common.add_argument("--max-core-vars", type=int, default=DEFAULT_MAX_CORE_VARS, metavar="N",
                        help="refuse exhaustive sweeps over more variables than this")
    common.add_argument("--counters", action="store_true",
                        help="report SAT calls and per-output work on standard error")
    common.add_argument("--normalize", action="store_true",
                        help="accept tautological clauses (their coordinate is always 1)")

    parser = _Parser(prog="sigenum", description="Enumerate the signatures of a CNF formula.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("all", parents=[common], help="all signatures")
    sub.add_parser("minimal", parents=[common], help="minimal signatures")
    sub.add_parser("maximal", parents=[common], help="maximal signatures (small inputs only)")
    sub.add_parser("count", parents=[common], help="number of signatures")
    sub.add_parser("stats", parents=[common], help="formula statistics")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def resolve_algorithm(cnf: Cnf, algo: str, engine: str) -> tuple[str, str]:
    """Concrete (algorithm, engine) for the requested options."""
    work, _ = normalize(cnf)
    if algo == "auto":
        if is_monotone(work):
            return "monotone", "-"
        if work.dim <= 2 or is_horn(work):
            return "flashlight", engine_for(work) if engine == "auto" else engine
        return "bounded-dim", "-"
    if algo == "flashlight":
        if engine == "auto":
            engine = engine_for(work)
        return algo, engine
    return algo, "-"


def signature_stream(
    cnf: Cnf,
    algo: str,
    engine: str,
    max_core_vars: int,
    meter: Optional[WorkMeter],
    oracle_box: Optional[list] = None,
) -> Iterator[tuple[tuple, dict]]:
    if algo == "brute":
        for sig, w in brute_force_signatures(cnf).items():
            yield sig, w
        return
    if algo == "flashlight":
        oracle = SatOracle(engine)
        if oracle_box is not None:
            oracle_box.append(oracle)
        general = engine == "dpll" and classify(normalize(cnf)[0]) == "general"
        yield from enumerate_flashlight(cnf, oracle, general=general)
        return
    if algo == "bounded-dim":
        yield from enumerate_bounded_dim(cnf, max_core_vars=max_core_vars, meter=meter)
        return
    if algo == "bounded-cooc":
        yield from enumerate_bounded_cooc(cnf, max_core_vars=max_core_vars, meter=meter)
        return
    if algo == "monotone":
        work, _ = normalize(cnf)
        if work is not cnf or not is_monotone(cnf):
            raise UsageError("--algo monotone needs a formula with only positive literals")
        yield from monotone_signatures(cnf, meter=meter)
        return
    raise UsageError(f"unknown algorithm {algo!r}")


def _format(sig, witness, index: int, fmt: str, show_witness: bool) -> str:
    bits = format_bits(sig)
    if fmt == "jsonl":
        obj = {"index": index, "signature": bits}
        if show_witness:
            obj["witness"] = {str(v): b for v, b in sorted(witness.items())}
        return json.dumps(obj)
    if show_witness:
        lits = " ".join(str(v if b else -v) for v, b in sorted(witness.items()))
        return f"{bits} {lits}".rstrip()
    return bits


def _stream(stream, args, out, counters_sink: Callable[[int], None]) -> int:
    if args.max_outputs is not None:
        stream = itertools.islice(stream, args.max_outputs)
    count = 0
    for sig, witness in stream:
        if out is not None:
            out.write(_format(sig, witness, count, args.format, args.witness) + "\n")
            out.flush()
        counters_sink(count)
        count += 1
    return count


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.max_outputs is not None and args.max_outputs < 0:
        print("sigenum: --max-outputs must be non-negative", file=stderr)
        return EXIT_USAGE

    try:
        text = _read(args.file)
        cnf = parse_dimacs(text, allow_tautologies=args.normalize)
    except (OSError, UnicodeDecodeError, DimacsError) as exc:
        print(f"sigenum: {exc}", file=stderr)
        return EXIT_INPUT

    try:
        if args.command == "stats":
            return _stats(cnf, stdout)
        algo, engine = resolve_algorithm(cnf, args.algo, args.engine)
        meter = WorkMeter() if args.counters else None
        oracle_box: list = []
        calls_at_output: list[int] = []

        def sink(_index: int) -> None:
            if oracle_box:
                calls_at_output.append(oracle_box[0].calls)

        if args.command == "minimal":
            stream = enumerate_minimal_signatures(cnf, meter=meter)
        else:
            stream = signature_stream(cnf, algo, engine, args.max_core_vars, meter, oracle_box)

        if args.command in ("all", "minimal"):
            emitted = _stream(stream, args, stdout, sink)
        elif args.command == "count":
            emitted = _stream(stream, args, None, sink)
            print(emitted, file=stdout)
        else:  # maximal
            pairs = {}
            for sig, w in stream:
                pairs.setdefault(sig, w)
            maxima = maximal_filter(pairs)
            emitted = _stream(((s, pairs[s]) for s in maxima), args, stdout, lambda _i: None)

        if args.counters:
            _report(stderr, args, algo, engine, emitted, meter, oracle_box, calls_at_output)
        return EXIT_OK
    except (UsageError, EngineMismatchError) as exc:
        print(f"sigenum: {exc}", file=stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"sigenum: resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except InvariantViolation as exc:
        print(f"sigenum: internal invariant violated: {exc}", file=stderr)
        return EXIT_INTERNAL
    except SigenumError as exc:
        print(f"sigenum: {exc}", file=stderr)
        return EXIT_INPUT


def _report(stderr, args, algo, engine, emitted, meter, oracle_box, calls_at_output) -> None:
    parts = [f"algo={algo}"]
    if engine != "-":
        parts.append(f"engine={engine}")
    parts.append(f"outputs={emitted}")
    if oracle_box:
        oracle = oracle_box[0]
        points = [0, *calls_at_output]
        gaps = [b - a for a, b in zip(points, points[1:])]
        parts.append(f"sat_calls={oracle.calls}")
        parts.append(f"max_sat_calls_between_outputs={max(gaps, default=0)}")
    if meter is not None and meter.marks:
        parts.append(f"work={meter.work}")
        parts.append(f"max_work_between_outputs={meter.max_gap()}")
    print(" ".join(parts), file=stderr)


def _stats(cnf: Cnf, out) -> int:
    work, mask = normalize(cnf)
    st = stats(cnf)
    rows = [
        ("n", cnf.n),
        ("m", cnf.m),
        ("dim", st.dim),
        ("cooccurrence", st.cooccurrence),
        ("monotone", st.monotone),
        ("horn", st.horn),
        ("two_cnf", st.two_cnf),
        ("class", classify(work)),
        ("tautologies", sum(mask)),
        ("conflict_edges", len(conflict_graph(work).edges())),
        ("dual_edges", len(dual_graph(cnf).edges())),
    ]
    for key, value in rows:
        if isinstance(value, bool):
            value = str(value).lower()
        print(f"{key}: {value}", file=out)
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    try:
        return run(argv)
    except BrokenPipeError:
        return EXIT_OK
