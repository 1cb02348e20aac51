"""Command-line interface: ``periodic-ranks <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 unsupported combination, 4 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import random
import sys
from typing import Sequence

from .automatic import (build_dfao, is_minimal, kernel, muggle_report_automatic,
                        orbit_partition, rank_automatic, witness_automatic)
from .errors import DomainError, ResourceError, UnsupportedError
from .numtheory import divisors, ord_pre
from .oracle import DEFAULT_BUDGET, DEFAULT_DEADLINE, FRAMEWORKS, diff_report
from .recursive import (divisor_sets_by_rank, minimal_char_poly, muggle_report_cr, rank_cr,
                        witness_cr)
from .regular import muggle_report_regular, rank_regular
from .sequences import make_sequence, parse_period

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_RESOURCE = 4

DEFAULT_SEED = 0
# verify without --alphabet picks the largest alphabet <= 4 within this many tuples.
AUTO_ALPHABET_MAX = 4
AUTO_TUPLE_CAP = 2 * 10**6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"2..15"`` -> 2, ..., 15; ``"3"`` -> 3; ``"2,3,5"`` -> 2, 3, 5."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise DomainError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise DomainError(f"malformed range {text!r}") from None
    return sorted(set(out))


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _sequence(args):
    return make_sequence(parse_period(args.period), strict=args.strict)


def _need_k(args, framework: str) -> int:
    if framework == "cr":
        return None
    if args.k is None:
        raise DomainError(f"framework {framework!r} needs --k")
    if args.k < 2:
        raise DomainError(f"base k must be >= 2, got {args.k}")
    return args.k


def cmd_rank(args) -> tuple[int, str]:
    s = _sequence(args)
    k = _need_k(args, args.framework)
    if args.framework == "automatic":
        value = rank_automatic(s, k)
    elif args.framework == "regular":
        value = rank_regular(s, k)
    else:
        value = rank_cr(s)
    if args.format == "text":
        return EXIT_OK, f"{value}\n"
    out = {"period": list(s.period), "ell": s.ell, "framework": args.framework,
           "k": k, "rank": value}
    if s.reduced:
        out["reduced_from"] = list(parse_period(args.period))
    return EXIT_OK, _dump(out) + "\n"


def cmd_kernel(args) -> tuple[int, str]:
    s = _sequence(args)
    ker = kernel(s, args.k)
    if args.format == "text":
        lines = [f"s({e.c}n+{e.r}) = ({e.as_sequence()})" for e in ker.elements]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _dump(ker.to_dict()) + "\n"


def cmd_dfao(args) -> tuple[int, str]:
    s = _sequence(args)
    if args.k < 2:
        raise DomainError(f"base k must be >= 2, got {args.k}")
    dfao = build_dfao(s, args.k)
    if args.format == "dot":
        return EXIT_OK, dfao.to_dot()
    out = dfao.to_dict()
    out["num_states"] = dfao.num_states
    out["minimal"] = is_minimal(dfao)
    return EXIT_OK, _dump(out) + "\n"


def _magic_report(framework: str, k, ell: int, empirical: bool, alphabet, budget):
    if framework == "cr":
        if empirical:
            raise DomainError("the cr report is exact; --empirical applies to automatic and regular")
        return muggle_report_cr(ell)
    if framework == "automatic":
        return muggle_report_automatic(k, ell, empirical=empirical,
                                       alphabet_size=alphabet, budget=budget)
    return muggle_report_regular(k, ell, empirical=empirical,
                                 alphabet_size=alphabet, budget=budget)


def cmd_magic(args) -> tuple[int, str]:
    k = _need_k(args, args.framework)
    report = _magic_report(args.framework, k, args.ell, args.empirical, args.alphabet,
                           args.budget)
    if args.format == "text":
        lines = [f"muggles: {', '.join(map(str, report.muggles))}",
                 f"magics: {', '.join(map(str, report.magics)) or '-'}"]
        return EXIT_OK, "\n".join(lines) + "\n"
    return EXIT_OK, _dump(report.to_dict(with_witnesses=args.witnesses)) + "\n"


def cmd_witness(args) -> tuple[int, str]:
    k = _need_k(args, args.framework)
    ell = args.ell
    if ell < 2:
        raise DomainError(f"ell must be >= 2, got {ell}")
    out = {"framework": args.framework, "k": k, "ell": ell}
    if args.framework == "automatic":
        if args.d is not None:
            d = args.d
        elif args.rank is not None:
            if args.rank % ell:
                raise DomainError(f"automatic ranks for ell={ell} are multiples of {ell}")
            d = args.rank // ell
        else:
            raise DomainError("automatic witnesses need --d or --rank")
        w = witness_automatic(k, ell, d)
        out.update(d=d, rank=rank_automatic(w, k),
                   partition=orbit_partition(k, ell, d))
    else:
        if args.framework == "regular" and math.gcd(k, ell) != 1:
            raise UnsupportedError(f"k={k} and ell={ell} are not coprime; no constructive witness")
        if args.divisors is not None:
            divs = parse_period(args.divisors)
        elif args.rank is not None:
            sets = divisor_sets_by_rank(ell)
            if args.rank not in sets:
                raise DomainError(f"{args.rank} is not an achievable rank for ell={ell}")
            divs = sets[args.rank]
        else:
            raise DomainError(f"{args.framework} witnesses need --divisors or --rank")
        w = witness_cr(divs, ell)
        value = rank_cr(w) if args.framework == "cr" else rank_regular(w, k)
        out.update(divisors=sorted(divs), rank=value,
                   char_poly=str(minimal_char_poly(w)))
    out["period"] = list(w.period)
    if args.format == "text":
        return EXIT_OK, f"{w}\n"
    return EXIT_OK, _dump(out) + "\n"


def _auto_alphabet(ell: int) -> int:
    a = AUTO_ALPHABET_MAX
    while a > 2 and a**ell > AUTO_TUPLE_CAP:
        a -= 1
    return a


def cmd_verify(args) -> tuple[int, str]:
    frameworks = FRAMEWORKS if args.framework == "all" else (args.framework,)
    ks = parse_range(args.k_range)
    ells = parse_range(args.ell)
    alphabets = parse_range(args.alphabet) if args.alphabet else None
    reports, skipped = [], []
    for framework in frameworks:
        for ell in ells:
            if ell < 2:
                raise DomainError(f"ell must be >= 2, got {ell}")
            for k in ([None] if framework == "cr" else ks):
                if k is not None and math.gcd(k, ell) != 1:
                    skipped.append({"framework": framework, "k": k, "ell": ell,
                                    "reason": "not coprime; no closed form to verify"})
                    continue
                for alphabet in alphabets or [_auto_alphabet(ell)]:
                    r = diff_report(framework, k, ell, alphabet, budget=args.budget,
                                    deadline=args.deadline)
                    reports.append(r.to_dict())
    passed = all(r["passed"] for r in reports)
    summary = {"passed": passed, "cells": len(reports), "seed": args.seed,
               "reports": reports, "skipped": skipped}
    code = EXIT_OK if passed else EXIT_FAILED
    if args.format == "text":
        lines = [f"{r['framework']} k={r['k']} ell={r['ell']} alphabet={r['alphabet_size']}: "
                 f"{'pass' if r['passed'] else 'FAIL'}" for r in reports]
        lines.append(f"{'PASS' if passed else 'FAIL'} ({len(reports)} cells, "
                     f"{len(skipped)} skipped)")
        return code, "\n".join(lines) + "\n"
    return code, _dump(summary) + "\n"


def automatic_table(k: int, ell: int) -> list[dict]:
    """Rows ``d, rank, k**d mod ell, partition, period``, largest ``d`` first."""
    if math.gcd(k, ell) != 1:
        raise UnsupportedError(f"k={k} and ell={ell} are not coprime")
    rows = []
    for d in sorted(divisors(ord_pre(k, ell).ord), reverse=True):
        w = witness_automatic(k, ell, d)
        rows.append({"d": d, "rank": rank_automatic(w, k), "multiplier": pow(k, d, ell),
                     "partition": orbit_partition(k, ell, d), "period": list(w.period)})
    return rows


def cr_table(ells: Sequence[int]) -> list[dict]:
    return [{"ell": ell, "ranks": list(muggle_report_cr(ell).muggles)} for ell in ells]


def cmd_table(args) -> tuple[int, str]:
    if args.framework == "automatic":
        if args.k is None or args.k < 2:
            raise DomainError("the automatic table needs --k >= 2")
        ells = parse_range(args.ell or "7")
        if len(ells) != 1:
            raise DomainError("the automatic table takes a single --ell")
        rows = automatic_table(args.k, ells[0])
        if args.format == "json":
            return EXIT_OK, _dump({"k": args.k, "ell": ells[0], "rows": rows}) + "\n"
        lines = [f"d | rank | {args.k}^d mod {ells[0]} | partition | period"]
        for r in rows:
            part = ",".join("{" + ",".join(map(str, o)) + "}" for o in r["partition"])
            period = "(" + ",".join(map(str, r["period"])) + ")"
            lines.append(f"{r['d']} | {r['rank']} | {r['multiplier']} | {part} | {period}")
        return EXIT_OK, "\n".join(lines) + "\n"
    rows = cr_table(parse_range(args.ell or "2..15"))
    if args.format == "json":
        return EXIT_OK, _dump({"rows": rows}) + "\n"
    lines = ["ell | ranks"]
    lines += [f"{r['ell']} | {','.join(map(str, r['ranks']))}" for r in rows]
    return EXIT_OK, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="periodic-ranks",
                     description="Ranks, kernels and magic numbers of periodic sequences.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the stdlib RNG (every command is deterministic)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def period_opts(p):
        p.add_argument("--period", required=True, help="comma-separated period, e.g. 0,1,1,1")
        p.add_argument("--strict", action="store_true", help="reject non-minimal periods")

    p = sub.add_parser("rank", help="rank of one sequence")
    period_opts(p)
    p.add_argument("--framework", choices=FRAMEWORKS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("kernel", help="list the k-kernel")
    period_opts(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("dfao", help="minimal automaton with output")
    period_opts(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_dfao)

    p = sub.add_parser("magic", help="muggle and magic numbers for a period length")
    p.add_argument("--framework", choices=FRAMEWORKS, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--empirical", action="store_true",
                   help="enumerate sequences instead of using the closed form")
    p.add_argument("--alphabet", type=int, help="alphabet size for --empirical")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--witnesses", action="store_true", help="attach a witness per muggle")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_magic)

    p = sub.add_parser("witness", help="construct a sequence with a given rank")
    p.add_argument("--framework", choices=FRAMEWORKS, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--d", type=int, help="automatic: divisor d of ord_ell(k)")
    p.add_argument("--divisors", help="cr/regular: divisor set, e.g. 3,5")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="exhaustive enumeration against the closed forms")
    p.add_argument("--framework", choices=FRAMEWORKS + ("all",), default="all")
    p.add_argument("--k", dest="k_range", default="2..5", help="range, e.g. 2..5")
    p.add_argument("--ell", default="2..10", help="range, e.g. 2..15")
    p.add_argument("--alphabet", help="range of alphabet sizes (default: automatic per ell)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--deadline", type=float, default=DEFAULT_DEADLINE,
                   help="seconds per cell")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate witnesses or achievable ranks")
    p.add_argument("--framework", choices=("automatic", "cr"), default="cr")
    p.add_argument("--k", type=int)
    p.add_argument("--ell", help="cr: range (default 2..15); automatic: one value (default 7)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # "--period -1,0,1" would read -1,0,1 as an option; glue it on with "=".
    out: list[str] = []
    it = iter(argv)
    for arg in it:
        if arg in ("--period", "--divisors"):
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        # argparse exits on --help (0) and on usage errors (2)
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    random.seed(args.seed)
    try:
        code, text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
