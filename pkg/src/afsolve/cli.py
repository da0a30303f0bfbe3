"""ICCMA-style command line front end.

Supports the probo flag convention: ``--formats`` and ``--problems`` print the
capability lists, and ``-p TASK -f FILE -fo apx [-a ARG]`` solves one task.
Results are printed in the bracketed format, one line, no spaces; acceptance
verdicts print YES or NO.  ``--oracle`` switches to the brute-force reference
backend (diagnostic use only, small frameworks).
"""

import argparse
import sys

from .framework import ApxError, ArgumentationFramework, canonical_key, parse_apx
from .oracle import TooLargeError, oracle_extensions
from .tasks import (
    PROBLEMS,
    SolveResult,
    Task,
    TaskSpec,
    UnknownArgumentError,
    UnsupportedTaskError,
    solve,
)

FORMATS = ("apx",)


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics instead of argparse's usage dump
    def error(self, message):
        raise _CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="afsolve", add_help=True)
    parser.add_argument("--formats", action="store_true", help="print supported input formats and exit")
    parser.add_argument("--problems", action="store_true", help="print supported task strings and exit")
    parser.add_argument("-p", metavar="TASK", help="task string, e.g. EE-CO")
    parser.add_argument("-f", metavar="FILE", help="path to the framework instance")
    parser.add_argument("-fo", metavar="FORMAT", help="input format (apx)")
    parser.add_argument("-a", metavar="ARG", help="query argument (DC/DS tasks only)")
    parser.add_argument("--oracle", action="store_true", help="solve with the brute-force reference backend")
    return parser


def format_extension(af: ArgumentationFramework, mask: int) -> str:
    return "[" + ",".join(af.names_of(mask)) + "]"


def format_output(result: SolveResult, af: ArgumentationFramework) -> str:
    """Render a result as the single output line (no trailing newline)."""
    if result.task in (Task.DC, Task.DS):
        return "YES" if result.verdict else "NO"
    if result.task is Task.CE:
        return str(result.count)
    if result.task is Task.SE:
        if result.extension is None:
            return "NO"
        return format_extension(af, result.extension)
    return "[" + ",".join(format_extension(af, e) for e in result.extensions) + "]"


_ORACLE_CODES = {"CO": "CO", "PR": "PR", "ST": "ST", "SST": "SST", "STG": "STG", "ID": "ID"}


def _solve_with_oracle(af: ArgumentationFramework, spec: TaskSpec) -> SolveResult:
    exts = sorted(
        oracle_extensions(af, _ORACLE_CODES[spec.semantics.value]),
        key=lambda m: canonical_key(m, af.n),
    )
    if spec.task is Task.SE:
        return SolveResult(spec.task, extension=exts[0] if exts else None)
    if spec.task is Task.EE:
        return SolveResult(spec.task, extensions=tuple(exts))
    if spec.task is Task.CE:
        return SolveResult(spec.task, count=len(exts))
    try:
        q = af.index_of(spec.query)
    except KeyError:
        raise UnknownArgumentError(f"unknown argument {spec.query!r}") from None
    if spec.task is Task.DC:
        return SolveResult(spec.task, verdict=any((e >> q) & 1 for e in exts))
    return SolveResult(spec.task, verdict=all((e >> q) & 1 for e in exts))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.formats:
            print("[%s]" % ",".join(FORMATS))
            return 0
        if args.problems:
            print("[%s]" % ",".join(sorted(PROBLEMS)))
            return 0
        if args.p is None:
            raise _CliError("no task given (-p)")
        if args.f is None:
            raise _CliError("no instance file given (-f)")
        if args.fo is None:
            raise _CliError("no input format given (-fo)")
        if args.fo not in FORMATS:
            raise _CliError(f"unsupported format {args.fo!r}")
        if args.p not in PROBLEMS:
            raise _CliError(f"unsupported task {args.p!r}")
        needs_query = args.p.startswith(("DC-", "DS-"))
        if needs_query and args.a is None:
            raise _CliError(f"task {args.p} requires a query argument (-a)")
        if not needs_query and args.a is not None:
            raise _CliError(f"task {args.p} does not take a query argument")
        try:
            with open(args.f, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise _CliError(f"cannot read {args.f}: {exc.strerror}") from None
        af = parse_apx(text)
        spec = TaskSpec.from_problem(args.p, args.a)
        if args.oracle:
            result = _solve_with_oracle(af, spec)
        else:
            result = solve(af, spec)
        print(format_output(result, af))
        return 0
    except (_CliError, ApxError, UnknownArgumentError, UnsupportedTaskError, TooLargeError) as exc:
        print(f"afsolve: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
