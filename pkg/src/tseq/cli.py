"""Command-line front end.

One verb per invocation: validate, map, invmap, candidates, enumerate,
count, estimate, growth, oeis-check, bench.  Sequences travel in the
shared text format (decimal terms separated by single spaces, one
sequence per line).  Every verb accepts --json and then emits a single
JSON object carrying the same values as the human output (enumerate
streams one JSON array per line instead).  Exit status: 0 for success
or valid input, 1 for invalid input or a failed check, 2 for usage
errors.  NO_COLOR disables the coloring of validation reports; no other
environment variable affects results.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Iterable

from . import analysis, bijection, counting, sequences

SCHEMA = "tseq.v1"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class _InputError(Exception):
    """Bad input data (not usage): reported on stderr with exit status 1."""


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _red(text: str) -> str:
    return f"\x1b[31m{text}\x1b[0m" if _color_enabled() else text


def _emit_json(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload))


def _parse_line(line: str) -> sequences.Terms:
    try:
        return sequences.parse_terms(line)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc


def _input_sequences(args) -> list[sequences.Terms]:
    """Sequences from positional terms, --file, or standard input."""
    if args.terms and args.file:
        raise _InputError("give terms either as arguments or via --file, not both")
    if args.terms:
        return [_parse_line(" ".join(args.terms))]
    if args.file and args.file != "-":
        try:
            with open(args.file, encoding="ascii") as handle:
                lines = handle.read().splitlines()
        except OSError as exc:
            raise _InputError(str(exc)) from exc
    else:
        lines = sys.stdin.read().splitlines()
    seqs = [_parse_line(line) for line in lines if line.strip()]
    if not seqs:
        raise _InputError("no input sequences")
    return seqs


def _add_sequence_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("terms", nargs="*", help="sequence terms (decimal integers)")
    parser.add_argument(
        "--file", help="read sequences from FILE, one per line ('-' for standard input)"
    )


def _report_lines(terms, report) -> list[str]:
    head = sequences.format_terms(terms)
    if report.valid:
        return [f"{head}: valid"]
    lines = [f"{head}: invalid"]
    for v in report.violations:
        where = f"term {v.index}" if v.index else "sequence"
        lines.append(_red(f"  {where}: {v.rule}: {v.detail}"))
    return lines


def _report_json(terms, report) -> dict:
    return {
        "sequence": list(terms),
        "valid": report.valid,
        "violations": [
            {"index": v.index, "rule": v.rule, "detail": v.detail} for v in report.violations
        ],
    }


def _cmd_validate(args) -> int:
    seqs = _input_sequences(args)
    results = []
    for terms in seqs:
        if args.kind == "tournament":
            report = sequences.validate_tournament(terms)
        else:
            report = sequences.validate_meeussen(terms, args.mode, budget=args.budget)
        results.append((terms, report))
    if args.json:
        _emit_json({
            "verb": "validate",
            "kind": args.kind,
            "results": [_report_json(t, r) for t, r in results],
        })
    else:
        for terms, report in results:
            for line in _report_lines(terms, report):
                print(line)
    return EXIT_OK if all(r.valid for _, r in results) else EXIT_INVALID


def _map_sequences(seqs, func, verb: str, json_mode: bool) -> int:
    outputs = []
    for terms in seqs:  # compute everything first: no partial output on failure
        try:
            outputs.append(func(terms))
        except (sequences.InvalidSequenceError, bijection.NotMeeussenError) as exc:
            raise _InputError(f"{sequences.format_terms(terms)}: {exc}") from exc
    if json_mode:
        _emit_json({
            "verb": verb,
            "results": [
                {"input": list(t), "output": list(o)} for t, o in zip(seqs, outputs)
            ],
        })
    else:
        for out in outputs:
            print(sequences.format_terms(out))
    return EXIT_OK


def _cmd_map(args) -> int:
    return _map_sequences(_input_sequences(args), bijection.phi, "map", args.json)


def _cmd_invmap(args) -> int:
    return _map_sequences(_input_sequences(args), bijection.phi_inverse, "invmap", args.json)


def _cmd_candidates(args) -> int:
    def compute(terms):
        return sequences.candidates(terms, budget=args.budget)

    return _map_sequences(_input_sequences(args), compute, "candidates", args.json)


def _cmd_enumerate(args) -> int:
    if args.json:
        def visitor(terms):
            print(json.dumps(list(terms)))
    else:
        def visitor(terms):
            print(sequences.format_terms(terms))

    sequences.enumerate_tree(args.kind, args.depth, visitor, depth_limit=args.limit)
    return EXIT_OK


def _cmd_count(args) -> int:
    if (args.n is None) == (args.upto is None):
        raise _InputError("give exactly one of -n or --upto")
    if args.upto is not None:
        if not args.bfile:
            raise _InputError("--upto requires --bfile")
        lines = list(counting.bfile_lines(args.upto))
        if args.json:
            values = [line.split() for line in lines]
            _emit_json({
                "verb": "count",
                "bfile": [{"n": int(n), "value": v} for n, v in values],
            })
        else:
            for line in lines:
                print(line)
        return EXIT_OK

    n = args.n
    method = args.method
    if method == "fast":
        value = counting.count_fast(n)
    elif method == "profile":
        value = counting.count_via_profile(n)
    elif method == "dfs":
        value = counting.count_dfs(n)
    else:
        value = counting.count_via_polynomial(n)
    if args.json:
        _emit_json({"verb": "count", "n": n, "method": method, "value": str(value)})
    else:
        print(value)
    return EXIT_OK


def _cmd_estimate(args) -> int:
    est = analysis.estimate_count(args.n, args.samples, args.seed, streams=args.threads)
    mean = analysis.format_fixed(est.mean, args.digits)
    std_error = analysis.format_fixed(est.std_error, args.digits)
    if args.json:
        _emit_json({
            "verb": "estimate",
            "n": est.n,
            "samples": est.samples,
            "seed": est.seed,
            "streams": est.streams,
            "mean": mean,
            "std_error": std_error,
        })
    else:
        print(f"mean {mean}")
        print(f"std_error {std_error}")
    return EXIT_OK


def _cmd_growth(args) -> int:
    points = analysis.growth_series(args.upto, args.base)
    best = analysis.peak(points)
    lines = list(analysis.growth_csv_lines(points, digits=args.digits))
    if args.json:
        _emit_json({
            "verb": "growth",
            "base": args.base,
            "digits": args.digits,
            "points": [
                {
                    "n": p.n,
                    "lg_s": analysis.format_fixed(p.lg_s, args.digits),
                    "c": analysis.format_fixed(p.c_value, args.digits),
                }
                for p in points
            ],
            "peak": {"n": best.n, "c": analysis.format_fixed(best.c_value, args.digits)},
        })
    else:
        for line in lines:
            print(line)
        print(
            f"peak: n={best.n} c={analysis.format_fixed(best.c_value, args.digits)}",
            file=sys.stderr,
        )
    if args.plot:
        from . import plotting

        plotting.growth_figure(points, args.plot)
    return EXIT_OK


def _cmd_oeis_check(args) -> int:
    limit = args.max
    if not 1 <= limit <= len(counting.PUBLISHED_COUNTS):
        raise _InputError(f"--max must lie in [1, {len(counting.PUBLISHED_COUNTS)}]")
    mismatches = []
    for n in range(1, limit + 1):
        got = counting.count_fast(n)
        want = counting.PUBLISHED_COUNTS[n - 1]
        if got != want:
            mismatches.append({"n": n, "computed": str(got), "published": str(want)})
    if args.json:
        _emit_json({
            "verb": "oeis-check",
            "max": limit,
            "ok": not mismatches,
            "mismatches": mismatches,
        })
    else:
        if mismatches:
            for m in mismatches:
                print(f"n={m['n']}: computed {m['computed']} != published {m['published']}")
        else:
            print(f"all {limit} values match the published list")
    return EXIT_OK if not mismatches else EXIT_INVALID


def _cmd_bench(args) -> int:
    table = counting.CountTable()
    rows: list[tuple[int, float]] = []
    for n in range(1, args.upto + 1):
        start = time.perf_counter()
        table.extend_to(n)
        rows.append((n, time.perf_counter() - start))
    if args.json:
        _emit_json({
            "verb": "bench",
            "rows": [{"n": n, "seconds": secs} for n, secs in rows],
        })
    else:
        for n, secs in rows:
            print(f"{n} {secs:.6f}")
    if args.plot:
        from . import plotting

        plotting.bench_figure(rows, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tseq",
        description="Tournament and Meeussen sequence toolkit",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = with_json(sub.add_parser("validate", help="check a sequence against a role"))
    p.add_argument("--kind", choices=("tournament", "meeussen"), required=True)
    p.add_argument("--mode", choices=("dp", "structural"), default="dp",
                   help="Meeussen checking strategy (ignored for tournament)")
    p.add_argument("--budget", type=int, default=sequences.DEFAULT_DP_BUDGET,
                   help="subset-sum target budget for dp mode")
    _add_sequence_source(p)
    p.set_defaults(func=_cmd_validate)

    p = with_json(sub.add_parser("map", help="tournament sequence to its Meeussen image"))
    _add_sequence_source(p)
    p.set_defaults(func=_cmd_map)

    p = with_json(sub.add_parser("invmap", help="Meeussen sequence to its tournament preimage"))
    _add_sequence_source(p)
    p.set_defaults(func=_cmd_invmap)

    p = with_json(sub.add_parser("candidates", help="legal extension values of a Meeussen sequence"))
    p.add_argument("--budget", type=int, default=sequences.DEFAULT_DP_BUDGET)
    _add_sequence_source(p)
    p.set_defaults(func=_cmd_candidates)

    p = with_json(sub.add_parser("enumerate", help="stream all sequences of a given length"))
    p.add_argument("--kind", choices=("tournament", "meeussen"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--limit", type=int, default=sequences.DEFAULT_DEPTH_LIMIT,
                   help="enumeration depth cap")
    p.set_defaults(func=_cmd_enumerate)

    p = with_json(sub.add_parser("count", help="exact number of sequences of length n"))
    p.add_argument("-n", type=int, help="single level to count")
    p.add_argument("--method", choices=("fast", "profile", "dfs", "poly"), default="fast")
    p.add_argument("--upto", type=int, help="emit levels 1..N (requires --bfile)")
    p.add_argument("--bfile", action="store_true", help="b-file output: lines 'n value'")
    p.set_defaults(func=_cmd_count)

    p = with_json(sub.add_parser("estimate", help="Monte Carlo estimate of a level count"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1,
                   help="independent sample streams merged associatively")
    p.add_argument("--digits", type=int, default=6)
    p.set_defaults(func=_cmd_estimate)

    p = with_json(sub.add_parser("growth", help="growth-constant series as CSV"))
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--base", choices=("2", "e"), default=analysis.DEFAULT_GROWTH_BASE,
                   help="log base of the (log n)^2 denominator")
    p.add_argument("--digits", type=int, default=10)
    p.add_argument("--plot", metavar="FILE", help="also render the series to an image file")
    p.set_defaults(func=_cmd_growth)

    p = with_json(sub.add_parser("oeis-check", help="compare against the published level counts"))
    p.add_argument("--max", type=int, default=len(counting.PUBLISHED_COUNTS))
    p.set_defaults(func=_cmd_oeis_check)

    p = with_json(sub.add_parser("bench", help="time each table row extension"))
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--plot", metavar="FILE", help="also render the timings to an image file")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    # counts beyond ~4300 digits (levels ~176 and up) must still print
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"tseq: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except sequences.BudgetExceededError as exc:
        print(f"tseq: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"tseq: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
