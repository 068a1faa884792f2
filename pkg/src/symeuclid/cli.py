"""Command line front end.

Five subcommands: trace, two-squares, identities, nest, verify.  Every
invocation emits one record, as readable text (default) or as a single
JSON object with --format json.  Integers pass through Python's int, so
there is no size ceiling on single-instance commands; scanning commands
are guarded by the sweep bound (see the SYMEUCLID_MAX_SWEEP variable).

Exit codes: 0 success, 2 usage or sweep-bound error, 3 domain error
(non-coprime, not symmetric, not a root of -1), 4 internal-consistency
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from typing import IO

from .errors import (
    DomainError,
    InternalCheckError,
    NotCoprimeError,
    NotSqrtMinusOneError,
    NotSymmetricError,
    SweepBoundError,
)
from .euclid import euclid_trace, symmetric_trace
from .identities import FormIdentity, enumerate_identities, nest_chain
from .two_squares import all_primitive_representations, brillhart
from .verify import DEFAULT_CASES, DEFAULT_MAX_N, DEFAULT_SEED, run_suite

_OK, _USAGE, _DOMAIN, _INTERNAL = 0, 2, 3, 4


@lru_cache(maxsize=1)
def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output as readable text or one JSON record")

    parser = argparse.ArgumentParser(
        prog="symeuclid",
        description="Euclidean algorithm traces, two-squares decomposition and remainder identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", parents=[common],
                       help="run the algorithm on coprime n > a, palindromic form if one exists")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)

    p = sub.add_parser("two-squares", parents=[common],
                       help="primitive representations n = x^2 + y^2")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--a", type=int, default=None,
                       help="decompose via this square root of -1 mod n")
    group.add_argument("--all", action="store_true",
                       help="scan for all square roots of -1 and decompose each (default)")

    p = sub.add_parser("identities", parents=[common],
                       help="quadratic-form identities in the remainders of a symmetric trace")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("--nontrivial", action="store_true",
                   help="drop rows with a zero factor or multiplier 0 or n")

    p = sub.add_parser("nest", parents=[common],
                       help="strip the palindrome one quotient at a time")
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)

    p = sub.add_parser("verify", parents=[common],
                       help="run the exhaustive and randomized property suite")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n",
                   help=f"exhaustive sweep bound (default {DEFAULT_MAX_N})")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"fuzz generator seed (default {DEFAULT_SEED})")
    p.add_argument("--cases", type=int, default=DEFAULT_CASES,
                   help=f"instances per fuzz property (default {DEFAULT_CASES})")

    return parser


def _identity_line(identity: FormIdentity) -> str:
    p, q, u, v = identity.factor_values
    sign = "+" if identity.family == "plus" else "-"
    left = f"{p}^2" if p == q else f"{p}*{q}"
    right = f"{u}^2" if u == v and identity.family == "plus" else f"{u}*{v}"
    line = f"{left} {sign} {right} = {identity.multiplier} * {identity.n}"
    return f"{line} [degenerate]" if identity.degenerate else line


def _cmd_trace(args) -> tuple[dict, list[str], int]:
    try:
        trace = symmetric_trace(args.n, args.a)
    except NotSymmetricError:
        trace = euclid_trace(args.n, args.a)
    payload = {
        "quotients": list(trace.quotients),
        "remainders": list(trace.remainders),
        "convention_applied": trace.convention_applied,
        "symmetric": trace.symmetric,
        "half_length": trace.half_length,
    }
    lines = [
        "quotients: " + " ".join(map(str, trace.quotients)),
        "remainders: " + " ".join(map(str, trace.remainders)),
        f"convention_applied: {str(trace.convention_applied).lower()}",
        f"symmetric: {str(trace.symmetric).lower()}",
    ]
    if trace.symmetric:
        lines.append(f"s: {trace.half_length}")
    return payload, lines, _OK


def _cmd_two_squares(args) -> tuple[dict, list[str], int]:
    if args.a is not None:
        x, y = brillhart(args.n, args.a)
        return {"n": args.n, "a": args.a, "x": x, "y": y}, [f"{x} {y}"], _OK
    reps = sorted(all_primitive_representations(args.n), reverse=True)
    payload = {"n": args.n, "representations": [[x, y] for x, y in reps]}
    lines = [" ".join(f"({x},{y})" for x, y in reps)] if reps else []
    return payload, lines, _OK


def _cmd_identities(args) -> tuple[dict, list[str], int]:
    trace = symmetric_trace(args.n, args.a)
    found = enumerate_identities(trace, nontrivial_only=args.nontrivial)
    payload = {
        "n": args.n,
        "a": args.a,
        "s": trace.half_length,
        "nontrivial_only": args.nontrivial,
        "identities": [
            {
                "family": f.family,
                "i": f.i,
                "j": f.j,
                "factor_indices": list(f.factor_indices),
                "factor_values": list(f.factor_values),
                "multiplier": f.multiplier,
                "sub_palindrome": list(f.sub_palindrome),
                "degenerate": f.degenerate,
            }
            for f in found
        ],
    }
    return payload, [_identity_line(f) for f in found], _OK


def _cmd_nest(args) -> tuple[dict, list[str], int]:
    chain = nest_chain(args.n, args.a)
    payload = {
        "n": args.n,
        "a": args.a,
        "entries": [[e.numerator, e.denominator] for e in chain.entries],
        "multipliers": list(chain.multipliers),
    }
    lines = [
        " ".join(f"{e.numerator}/{e.denominator}" for e in chain.entries),
        " ".join(["multipliers:", *map(str, chain.multipliers)]),
    ]
    return payload, lines, _OK


def _cmd_verify(args) -> tuple[dict, list[str], int]:
    reports = run_suite(max_n=args.max_n, seed=args.seed, cases=args.cases)
    payload = {
        "max_n": args.max_n,
        "seed": args.seed,
        "cases": args.cases,
        "properties": [
            {"name": r.name, "instances": r.instances, "ok": r.ok, "counterexample": r.counterexample}
            for r in reports
        ],
    }
    lines = []
    failures = 0
    for r in reports:
        if r.ok:
            lines.append(f"{r.name}: {r.instances} instances ok")
        else:
            failures += 1
            lines.append(f"{r.name}: FAIL ({r.instances} instances): {r.counterexample}")
    if failures:
        lines.append(f"{failures} of {len(reports)} properties failed")
    else:
        lines.append(f"all {len(reports)} properties ok")
    return payload, lines, _OK if failures == 0 else _INTERNAL


_HANDLERS = {
    "trace": _cmd_trace,
    "two-squares": _cmd_two_squares,
    "identities": _cmd_identities,
    "nest": _cmd_nest,
    "verify": _cmd_verify,
}

_ERROR_CODES = [
    (NotCoprimeError, "not-coprime"),
    (NotSymmetricError, "not-symmetric"),
    (NotSqrtMinusOneError, "not-sqrt-minus-one"),
    (SweepBoundError, "sweep-bound"),
    (DomainError, "domain"),
    (InternalCheckError, "internal"),
]


def _error_code(exc: Exception) -> str:
    for klass, code in _ERROR_CODES:
        if isinstance(exc, klass):
            return code
    return "error"


def _inputs(args) -> list[int]:
    values = []
    for name in ("n", "a"):
        value = getattr(args, name, None)
        if value is not None:
            values.append(value)
    return values


def _emit(args, record: dict, lines: list[str], out: IO[str]) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)


def main(argv: list[str] | None = None, out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _USAGE

    try:
        payload, lines, code = _HANDLERS[args.command](args)
    except (DomainError, SweepBoundError, InternalCheckError) as exc:
        record = {
            "command": args.command,
            "inputs": _inputs(args),
            "payload": {"code": _error_code(exc), "message": str(exc)},
            "status": "error",
        }
        _emit(args, record, [f"error ({_error_code(exc)}): {exc}"], err)
        if isinstance(exc, SweepBoundError):
            return _USAGE
        if isinstance(exc, InternalCheckError):
            return _INTERNAL
        return _DOMAIN

    record = {"command": args.command, "inputs": _inputs(args), "payload": payload, "status": "ok"}
    _emit(args, record, lines, out)
    return code


def entry() -> None:
    raise SystemExit(main())
