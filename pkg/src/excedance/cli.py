"""
Command-line front end.

    excedance exact --r 1 --s 1
    excedance exact --word baab
    excedance asym --diag 200
    excedance compare --ray 5:4 --n-list 90,180,360
    excedance check --suite bijections --max-n 7

Exit codes: 0 success, 1 check failure, 2 usage error, 3 brute-force limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import asymptotics as asy
from .checks import SUITES, run_suite
from .comparison import compare_rows, rows_to_csv
from .counting import (
    BruteForceLimitError,
    count_alpha_bruteforce,
    count_block_word,
    count_by_word_bruteforce,
    count_cstar,
    count_cstar_bruteforce,
)
from .permutation import validate_word
from .series import coeff_to_count, egf_coefficients

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _document(inputs: dict, result: dict, warnings: list[str] | None = None) -> str:
    return json.dumps({"inputs": inputs, "result": result, "warnings": warnings or []}, indent=2) + "\n"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _n_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _ray(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"ray must look like r:s, got {text!r}") from None
    if a < 1 or b < 1:
        raise argparse.ArgumentTypeError("ray components must be positive")
    return a, b


def cmd_exact(args) -> str:
    limit = args.limit
    if args.word is not None:
        word = validate_word(args.word)
        inputs = {"word": word}
        count, method = count_by_word_bruteforce(word, limit), "bruteforce"
    elif args.cstar is not None:
        if args.cstar < 2:
            raise UsageError("--cstar needs m >= 2")
        inputs = {"cstar": args.cstar}
        if args.bruteforce:
            count, method = count_cstar_bruteforce(args.cstar, limit), "bruteforce"
        else:
            count, method = count_cstar(args.cstar), "formula"
    elif args.alpha is not None:
        inputs = {"alpha": args.alpha}
        count, method = count_alpha_bruteforce(args.alpha, limit), "bruteforce"
    else:
        if args.r is None or args.s is None:
            raise UsageError("exact needs --r and --s, --word, --cstar or --alpha")
        inputs = {"r": args.r, "s": args.s}
        if args.series:
            table = egf_coefficients(args.r + 1, args.s)
            count, method = coeff_to_count(args.r + 1, args.s, table), "series"
        elif args.bruteforce:
            word = "b" * args.r + "a" * args.s
            count, method = count_by_word_bruteforce(word, limit), "bruteforce"
        else:
            count, method = count_block_word(args.r, args.s), "formula"
    return _document(inputs, {"count": str(count), "method": method})


def cmd_asym(args) -> str:
    warnings = []
    if args.diag is not None:
        est = asy.diagonal_estimate(args.diag)
        x = y = asy.LOG2
        inputs = {"diag": args.diag}
        outside = False
    else:
        if args.r is None or args.s is None:
            raise UsageError("asym needs --r and --s, or --diag")
        sp = asy.saddle_point(args.r, args.s)
        est = asy.log_estimate_block(args.r, args.s)
        x, y = sp.x, sp.y
        inputs = {"r": args.r, "s": args.s}
        outside = sp.outside_sector
        if outside:
            warnings.append("direction lies outside the sector; the estimate carries no guarantee there")
    result = {
        "x": x,
        "y": y,
        "Q": asy.q_specialized(x, y),
        "log_estimate": est.log_value,
        "components": {
            "log_factorials": est.log_factorials,
            "log_power_term": est.log_power_term,
            "log_prefactor": est.log_prefactor,
            "leading_coefficient": est.leading_coefficient,
        },
        "outside_sector": outside,
        "scientific": est.scientific(),
    }
    return _document(inputs, result, warnings)


def cmd_compare(args) -> str:
    try:
        rows = compare_rows(args.n_list, ray=args.ray)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return rows_to_csv(rows)


def cmd_check(args) -> tuple[str, bool]:
    results = run_suite(args.suite, args.max_n)
    ok = all(r.passed for r in results)
    inputs = {"suite": args.suite, "max_n": args.max_n}
    return _document(inputs, {"passed": ok, "properties": [r.to_dict() for r in results]}), ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="excedance", description=__doc__.splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)

    exact = sub.add_parser("exact", help="exact counts as decimal strings")
    exact.add_argument("--r", type=_non_negative_int, help="number of leading b's in b^r a^s")
    exact.add_argument("--s", type=_non_negative_int, help="number of trailing a's in b^r a^s")
    exact.add_argument("--word", help="arbitrary a/b word (brute force)")
    exact.add_argument("--cstar", type=_positive_int, metavar="M", help="m-cycles with no stretching pair")
    exact.add_argument("--alpha", type=_positive_int, metavar="N", help="permutations avoiding 21-34 and 34-21")
    how = exact.add_mutually_exclusive_group()
    how.add_argument("--series", action="store_true", help="use the power-series oracle for b^r a^s")
    how.add_argument("--bruteforce", action="store_true", help="enumerate instead of using the formula")
    exact.add_argument("--limit", type=_positive_int, default=None, help="brute-force size limit (default 10)")

    asym = sub.add_parser("asym", help="saddle-point estimate of b^{r-1} a^s")
    asym.add_argument("--r", type=_positive_int)
    asym.add_argument("--s", type=_positive_int)
    asym.add_argument("--diag", type=_positive_int, metavar="N", help="most balanced block word of S_N")

    compare = sub.add_parser("compare", help="CSV of exact vs estimated log counts")
    mode = compare.add_mutually_exclusive_group(required=True)
    mode.add_argument("--diag", action="store_true")
    mode.add_argument("--ray", type=_ray, metavar="R:S")
    compare.add_argument("--n-list", type=_n_list, required=True)

    check = sub.add_parser("check", help="run an invariant suite")
    check.add_argument("--suite", choices=sorted(SUITES), required=True)
    check.add_argument("--max-n", type=_positive_int, default=None,
                       help="enumeration size; sample count for minimality, grid size for monotone")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with code 2 on bad flags
    try:
        if args.command == "exact":
            sys.stdout.write(cmd_exact(args))
        elif args.command == "asym":
            sys.stdout.write(cmd_asym(args))
        elif args.command == "compare":
            sys.stdout.write(cmd_compare(args))
        else:
            out, ok = cmd_check(args)
            sys.stdout.write(out)
            return EXIT_OK if ok else EXIT_CHECK_FAILED
    except BruteForceLimitError as exc:
        print(f"excedance: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError) as exc:
        print(f"excedance: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
