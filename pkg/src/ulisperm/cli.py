"""Command-line interface.

Subcommands:

  rank       rank sequence of a permutation (--invert for the inverse map)
  map        carry an avoider without a unique longest increasing
             subsequence to one with a unique one
  avoiders   list or count pattern-avoiding permutations of a given length
  sequences  list or count rank sequences of a given length
  census     exact per-length counts and ratios, enumerative or DP engine
  verify     run an exhaustive verification suite
  oeis       fetch (or serve bundled) OEIS b-file data

Exit codes: 0 success / suite passed, 1 verification failure, 2 usage or
input error.  Machine-readable output goes to stdout, diagnostics to stderr;
repeated invocations produce byte-identical stdout (timing lives on stderr).
There is no randomness anywhere: every command is deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import census as census_mod
from . import oeis as oeis_mod
from .errors import InputError
from .permutations import (
    AVOIDER_CAP,
    PATTERN_132,
    Permutation,
    contains_pattern,
    enumerate_avoiders,
    format_values,
    start_ranks,
)
from .ranks import SEQUENCE_CAP, RankSequence, enumerate_rank_sequences, invert, rank_sequence
from .ulis import uniquify_lis, uniquify_max
from .verify import SUITE_NAMES, run_suite

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulisperm",
        description="Exact combinatorics of 132-avoiding permutations and "
                    "unique longest increasing subsequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"),
                     default="plain", help="output format (default plain)")

    p_rank = sub.add_parser("rank", help="rank sequence of a permutation")
    p_rank.add_argument("text", help="permutation, e.g. '2 1 3' or '213'")
    p_rank.add_argument("--invert", action="store_true",
                        help="treat input as a rank sequence and print the "
                             "unique 132-avoider having it")

    p_map = sub.add_parser("map", help="inject into the unique-subsequence class")
    p_map.add_argument("text", help="132-avoiding permutation without a "
                                    "unique longest increasing subsequence")
    p_map.add_argument("--trace", action="store_true",
                       help="print the intermediate rank sequences")

    p_avoiders = sub.add_parser("avoiders", parents=[fmt],
                                help="list or count pattern avoiders")
    p_avoiders.add_argument("n", type=int)
    p_avoiders.add_argument("--pattern", default="132",
                            help="length-3 pattern to avoid (default 132)")
    p_avoiders.add_argument("--count", action="store_true",
                            help="print only the count")
    p_avoiders.add_argument("--cap", type=int, default=AVOIDER_CAP,
                            help=f"enumeration cap (default {AVOIDER_CAP})")

    p_sequences = sub.add_parser("sequences", parents=[fmt],
                                 help="list or count rank sequences")
    p_sequences.add_argument("n", type=int)
    p_sequences.add_argument("--count", action="store_true",
                             help="print only the count")
    p_sequences.add_argument("--cap", type=int, default=SEQUENCE_CAP,
                             help=f"enumeration cap (default {SEQUENCE_CAP})")

    p_census = sub.add_parser("census", parents=[fmt],
                              help="exact counts and ratios per length")
    p_census.add_argument("--max-n", type=int, required=True)
    p_census.add_argument("--engine", choices=("enumerative", "dp"), default="dp")
    p_census.add_argument("--cap", type=int, default=None,
                          help="engine cap override (defaults: enumerative "
                               f"{SEQUENCE_CAP}, dp {census_mod.DP_CAP})")

    p_verify = sub.add_parser("verify", parents=[fmt],
                              help="run an exhaustive verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--max-n", type=int, default=None,
                          help="upper bound; each suite has its own default")

    p_oeis = sub.add_parser("oeis", parents=[fmt],
                            help="fetch and print OEIS b-file entries")
    p_oeis.add_argument("--id", default=oeis_mod.FIXTURE_ID,
                        help=f"sequence id (default {oeis_mod.FIXTURE_ID})")
    network = p_oeis.add_mutually_exclusive_group()
    network.add_argument("--online", action="store_true",
                         help="fetch over HTTPS (falls back to the bundled "
                              "fixture on failure)")
    network.add_argument("--offline", action="store_true",
                         help="serve the bundled fixture (default)")
    p_oeis.add_argument("--cache-dir", default=None,
                        help="on-disk cache directory (also settable via "
                             f"{oeis_mod.CACHE_ENV_VAR})")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _dispatch(args: argparse.Namespace) -> int:
    handler = {
        "rank": _cmd_rank,
        "map": _cmd_map,
        "avoiders": _cmd_avoiders,
        "sequences": _cmd_sequences,
        "census": _cmd_census,
        "verify": _cmd_verify,
        "oeis": _cmd_oeis,
    }[args.command]
    return handler(args)


def _cmd_rank(args: argparse.Namespace) -> int:
    if args.invert:
        sequence = RankSequence.from_text(args.text)
        print(invert(sequence))
        return 0
    p = Permutation.from_text(args.text)
    verdict = contains_pattern(p, PATTERN_132)
    if verdict.contains:
        print(
            f"warning: input contains 132 at positions {verdict.witness}; "
            "ranks are still well-defined",
            file=sys.stderr,
        )
    print(format_values(start_ranks(p)))
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    p = Permutation.from_text(args.text)
    if args.trace:
        # recomputes the pipeline stages uniquify_lis performs internally
        verdict = contains_pattern(p, PATTERN_132)
        if verdict.contains:
            raise InputError(f"input contains 132 at positions {verdict.witness}: {p}")
        before = rank_sequence(p)
        after = uniquify_max(before)  # rejects inputs with a unique subsequence
        print(f"ranks:  {before}")
        print(f"lifted: {after}")
        print(invert(after))
        return 0
    print(uniquify_lis(p))
    return 0


def _print_listing(rows: Iterable[str], fmt: str, column: str) -> None:
    if fmt == "json":
        print(json.dumps(list(rows)))
    elif fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow([column])
        for row in rows:
            writer.writerow([row])
        sys.stdout.write(buffer.getvalue())
    else:
        for row in rows:
            print(row)


def _print_count(count: int, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"count": count}))
    elif fmt == "csv":
        print("count")
        print(count)
    else:
        print(count)


def _cmd_avoiders(args: argparse.Namespace) -> int:
    pattern = Permutation.from_text(args.pattern)
    stream = enumerate_avoiders(args.n, pattern, cap=args.cap)
    if args.count:
        _print_count(sum(1 for _ in stream), args.format)
    else:
        _print_listing((str(p) for p in stream), args.format, "permutation")
    return 0


def _cmd_sequences(args: argparse.Namespace) -> int:
    stream = enumerate_rank_sequences(args.n, cap=args.cap)
    if args.count:
        _print_count(sum(1 for _ in stream), args.format)
    else:
        _print_listing((str(t) for t in stream), args.format, "sequence")
    return 0


def _census_rows(args: argparse.Namespace) -> list[census_mod.CensusRow]:
    if args.engine == "enumerative":
        cap = args.cap if args.cap is not None else SEQUENCE_CAP
        return [census_mod.census_enumerative(n, cap=cap)
                for n in range(1, args.max_n + 1)]
    cap = args.cap if args.cap is not None else census_mod.DP_CAP
    return list(census_mod.census_rows_dp(args.max_n, cap=cap))


def _census_summary(rows: list[census_mod.CensusRow]) -> dict:
    half = Fraction(1, 2)
    min_row = min(rows, key=lambda row: row.ratio)
    nonincreasing_from = rows[-1].n
    for i in range(len(rows) - 1, 0, -1):
        if rows[i - 1].ratio >= rows[i].ratio:
            nonincreasing_from = rows[i - 1].n
        else:
            break
    return {
        "max_n": rows[-1].n,
        "min_ratio_num": str(min_row.ratio.numerator),
        "min_ratio_den": str(min_row.ratio.denominator),
        "min_ratio_at": min_row.n,
        "all_at_least_half": all(row.ratio >= half for row in rows),
        "equality_at": [row.n for row in rows if row.ratio == half],
        "nonincreasing_from": nonincreasing_from,
    }


def _cmd_census(args: argparse.Namespace) -> int:
    rows = _census_rows(args)
    summary = _census_summary(rows)
    if args.format == "json":
        print(json.dumps(
            {"rows": [row.to_json_dict() for row in rows], "summary": summary},
            sort_keys=True,
        ))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(census_mod.CSV_COLUMNS)
        for row in rows:
            record = row.to_json_dict()
            writer.writerow([record[col] for col in census_mod.CSV_COLUMNS])
        sys.stdout.write(buffer.getvalue())
        print(f"summary: {json.dumps(summary, sort_keys=True)}", file=sys.stderr)
    else:
        print("n catalan u v ratio approx(display-only)")
        for row in rows:
            approx = f"{float(row.ratio):.12g}"
            print(f"{row.n} {row.total} {row.u} {row.v} "
                  f"{row.ratio.numerator}/{row.ratio.denominator} {approx}")
        floor = ("every ratio >= 1/2" if summary["all_at_least_half"]
                 else "RATIO BELOW 1/2 FOUND")
        print(f"min ratio {summary['min_ratio_num']}/{summary['min_ratio_den']} "
              f"at n={summary['min_ratio_at']}; {floor}; "
              f"equality at n={summary['equality_at']}; "
              f"non-increasing from n={summary['nonincreasing_from']}")
    return 0 if summary["all_at_least_half"] else VERIFICATION_FAILURE


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.max_n)
    payload = report.to_payload()
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["suite", "max_n", "status", "outcome"])
        writer.writerow([
            args.suite,
            report.parameters["max_n"],
            report.outcome["status"],
            json.dumps(report.outcome, sort_keys=True),
        ])
        sys.stdout.write(buffer.getvalue())
    else:
        status = "PASS" if report.passed else "FAIL"
        stats = {k: v for k, v in report.outcome.items() if k != "status"}
        print(f"{status} {args.suite} max_n={report.parameters['max_n']} "
              f"{json.dumps(stats, sort_keys=True)}")
    print(f"duration_ms={report.duration_ms:.1f}", file=sys.stderr)
    return 0 if report.passed else VERIFICATION_FAILURE


def _cmd_oeis(args: argparse.Namespace) -> int:
    text = oeis_mod.fetch_bfile(
        args.id,
        online=args.online,
        cache_dir=args.cache_dir,
    )
    entries = oeis_mod.parse_bfile(text)
    if args.format == "json":
        print(json.dumps(
            [{"index": e.index, "value": str(e.value)} for e in entries]
        ))
    elif args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(["index", "value"])
        for e in entries:
            writer.writerow([e.index, e.value])
        sys.stdout.write(buffer.getvalue())
    else:
        for e in entries:
            print(f"{e.index} {e.value}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
