"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 no repair (timeout, budget or
search exhausted).  ``oracle`` exits 0/3/4 for complete/incomplete/incorrect.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import bench, core
from .ddmax import PreconditionViolated, ddmax
from .formats import FORMATS
from .metrics import DEFAULT_CAP
from .oracle import COMPLETE, BudgetExhausted, OracleSession

EXIT_OK, EXIT_USAGE, EXIT_NO_REPAIR = 0, 1, 2
ORACLE_EXIT = {"complete": 0, "incomplete": 3, "incorrect": 4}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_default(name, cast, fallback):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value for {name}: {raw!r}") from None


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")
    return fmt


def _config(args) -> core.RepairConfig:
    alphabet = core.DEFAULT_ALPHABET
    if args.alphabet_file:
        alphabet = bytes(dict.fromkeys(_read(args.alphabet_file)))
    seed = args.seed if args.seed is not None else _env_default("FSYNTH_SEED", int, 0)
    try:
        return core.RepairConfig(
            last_insert_only=args.last_insert_only,
            max_num_per_mask=args.max_per_mask,
            max_simultaneous_corrections=args.max_corrections,
            alphabet=alphabet,
            rng_seed=seed,
            max_iterations=args.max_iterations,
            insert=not args.no_insert,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _timeout(args):
    if args.timeout is not None:
        return args.timeout if args.timeout > 0 else None
    return _env_default("FSYNTH_TIMEOUT_SECS", float, bench.DEFAULT_TIMEOUT)


def cmd_oracle(args) -> int:
    _check_format(args.format)
    verdict = OracleSession(args.format).feedback(_read(args.input))
    print(verdict.value)
    return ORACLE_EXIT[verdict.value]


def cmd_repair(args) -> int:
    _check_format(args.format)
    cfg = _config(args)
    data = _read(args.input)
    session = OracleSession(args.format, budget=args.budget)
    session.set_timeout(_timeout(args))
    try:
        threads = core.repair(session, data, cfg)
    except BudgetExhausted as exc:
        print(f"no repair: {exc}", file=sys.stderr)
        return EXIT_NO_REPAIR
    except core.RepairError as exc:
        print(f"no repair: {exc}", file=sys.stderr)
        return EXIT_NO_REPAIR
    _write(args.out, threads[0].content)
    if args.report:
        report = {
            "format": args.format,
            "oracle_runs": session.run_count,
            "repairs": [
                {
                    "rank": i,
                    "edits": t.edits,
                    "boundary": t.boundary,
                    "operations": t.describe(),
                    "content": t.content.decode("latin-1"),
                }
                for i, t in enumerate(threads)
            ],
        }
        Path(args.report).write_text(json.dumps(report, indent=2) + "\n")
    print(f"repaired with {threads[0].edits} edit(s), {len(threads)} candidate(s), "
          f"{session.run_count} oracle runs", file=sys.stderr)
    return EXIT_OK


def cmd_ddmax(args) -> int:
    _check_format(args.format)
    data = _read(args.input)
    session = OracleSession(args.format, budget=args.budget)
    session.set_timeout(_timeout(args))
    try:
        out = ddmax(session, data)
    except BudgetExhausted as exc:
        print(f"no repair: {exc}", file=sys.stderr)
        return EXIT_NO_REPAIR
    except PreconditionViolated as exc:
        print(f"ddmax: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(args.out, out)
    if FORMATS[args.format].classify(out) is not COMPLETE:
        print("ddmax result does not parse", file=sys.stderr)
        return EXIT_NO_REPAIR
    return EXIT_OK


def cmd_mutate(args) -> int:
    if args.format is not None:
        _check_format(args.format)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    seed = args.seed if args.seed is not None else _env_default("FSYNTH_SEED", int, 0)
    data = _read(args.input)
    try:
        mutant, specs = bench.mutate(data, args.n, seed, args.format)
    except (ValueError, bench.Unmutatable) as exc:
        print(f"mutate: {exc}", file=sys.stderr)
        return EXIT_NO_REPAIR
    _write(args.out, mutant)
    if args.meta:
        meta = {"seed": seed, "n_mutations": args.n, "mutations": [vars(s) for s in specs]}
        Path(args.meta).write_text(json.dumps(meta, indent=2) + "\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    strategies = [s for s in args.strategies.split(",") if s]
    for s in strategies:
        if s not in bench.STRATEGIES:
            raise UsageError(f"unknown strategy {s!r}")
    formats = None
    if args.formats:
        formats = [_check_format(f) for f in args.formats.split(",")]
    root = Path(args.corpus)
    if not root.is_dir():
        raise UsageError(f"corpus directory {root} does not exist")
    corpus = bench.load_corpus(root, formats, tuple(args.subsets.split(",")), args.limit)
    reports = bench.run_bench(corpus, strategies, _config(args), _timeout(args),
                              args.budget, args.jobs, args.cap)
    lines = "".join(r.to_json() + "\n" for r in reports)
    if args.out == "-":
        sys.stdout.write(lines)
    else:
        Path(args.out).write_text(lines)
    print(bench.format_summary(bench.summarize(reports)), file=sys.stderr)
    return EXIT_OK


def cmd_corpus(args) -> int:
    formats = [_check_format(f) for f in args.formats.split(",")] if args.formats else list(FORMATS)
    paths = bench.make_corpus(Path(args.out), formats, args.per_format, args.seed)
    print(f"wrote {len(paths)} files under {args.out}", file=sys.stderr)
    return EXIT_OK


def _add_repair_options(p):
    p.add_argument("--seed", type=int, default=None, help="RNG seed (env FSYNTH_SEED)")
    p.add_argument("--alphabet-file", help="file whose bytes form the insertion alphabet")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--last-insert-only", dest="last_insert_only", action="store_true", default=True,
                       help="insert only at the parse boundary (default)")
    group.add_argument("--insert-anywhere", dest="last_insert_only", action="store_false",
                       help="also try insertions inside the valid prefix")
    p.add_argument("--no-insert", action="store_true", help="deletions only")
    p.add_argument("--max-per-mask", type=int, default=core.RepairConfig.max_num_per_mask)
    p.add_argument("--max-corrections", type=int, default=core.RepairConfig.max_simultaneous_corrections,
                   help="distinct boundaries kept per generation; negative for all")
    p.add_argument("--max-iterations", type=int, default=None)
    p.add_argument("--timeout", type=float, default=None,
                   help="seconds per input, 0 for none (env FSYNTH_TIMEOUT_SECS, default 60)")
    p.add_argument("--budget", type=int, default=None, help="maximum oracle runs per input")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fsynth", description="Repair corrupt inputs using parser feedback.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("oracle", help="print the parser verdict for an input")
    p.add_argument("--format", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("repair", help="repair an input by deletion and synthesis")
    p.add_argument("--format", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True, help="best repair; '-' for stdout")
    p.add_argument("--report", help="JSON file with every ranked repair")
    _add_repair_options(p)
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("ddmax", help="lexical maximizing delta debugging baseline")
    p.add_argument("--format", required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_ddmax)

    p = sub.add_parser("mutate", help="corrupt a valid input deterministically")
    p.add_argument("--format", default=None, help="redraw until the mutant no longer parses")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--meta", help="write the applied mutations as JSON")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("bench", help="run repair strategies over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--strategies", default="fsynth,ddmax")
    p.add_argument("--formats", default=None)
    p.add_argument("--subsets", default="single,multi")
    p.add_argument("--limit", type=int, default=None, help="files per format and subset")
    p.add_argument("--out", default="-", help="JSON-lines report; '-' for stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="edit distance threshold")
    _add_repair_options(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("corpus", help="generate a seeded mutation corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--formats", default=None)
    p.add_argument("--per-format", type=int, default=50)
    p.add_argument("--seed", type=int, default=2022)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fsynth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
