"""Command-line surface: counting, enumeration, the codecs, and bound checks.

Only data goes to stdout (CSV rows or JSON); everything informational goes
to stderr.  Exit status 0 means success with all asserted comparisons
passing, 1 an assertion or decode failure, 2 a usage error.

Counts can be memoized in a small JSON cache file.  The cache is advisory:
entries are re-verifiable exact counts, and deleting the file never changes
any output.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import tempfile
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .bounds import (REFERENCE_LOWER_GROWTH, CountReport,
                     pair_bound_below_headline, verify_bounds)
from .codec import PATTERN_1324, DecodeFailure, decode, encode
from .perms import (DEFAULT_ENUMERATION_CAP, Perm, as_perm, count_avoiders,
                    count_avoiders_with_first, enumerate_avoiders)
from .words import as_type_word, count_cb_free

CACHE_ENV = "PERMCODEC_CACHE"
DEFAULT_CACHE = ".permcodec-cache.json"
CACHE_VERSION = 1

REPORT_SCHEMA_VERSION = 1
PAIR_HEADLINE_MAX = 60


def parse_perm(text: str) -> Perm:
    """Permutation from comma-separated values, or contiguous digits when
    the length is at most 9 (longer contiguous strings are ambiguous)."""
    text = text.strip()
    if "," in text:
        try:
            entries = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"not a comma-separated permutation: {text!r}") from None
    elif text.isdigit():
        if len(text) > 9:
            raise ValueError("contiguous form is only valid up to length 9; "
                             "use comma-separated values")
        entries = [int(ch) for ch in text]
    else:
        raise ValueError(f"not a permutation: {text!r}")
    return as_perm(entries)


def format_perm(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


# --- count cache -----------------------------------------------------------

def _cache_path(args: argparse.Namespace) -> str | None:
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache", None):
        return args.cache
    return os.environ.get(CACHE_ENV, DEFAULT_CACHE)


def _load_cache(path: str | None) -> dict[str, int]:
    if path is None or not os.path.exists(path):
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        if raw.get("version") != CACHE_VERSION:
            return {}
        return {key: int(value) for key, value in raw["counts"].items()}
    except (OSError, ValueError, KeyError, AttributeError, TypeError):
        return {}  # advisory: a broken cache is just an empty one


def _store_cache(path: str | None, counts: dict[str, int]) -> None:
    if path is None:
        return
    payload = {"version": CACHE_VERSION,
               "counts": {key: str(value) for key, value in sorted(counts.items())}}
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except OSError as exc:
        print(f"warning: could not write cache {path}: {exc}", file=sys.stderr)


def _cache_key(pattern: Perm, n: int) -> str:
    return f"{format_perm(pattern)}:{n}"


def _count_one(n: int, pattern: Perm, jobs: int) -> int:
    if jobs > 1 and n >= 4:
        worker = partial(count_avoiders_with_first, n=n, q=pattern)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(worker, range(1, n + 1)))
    return count_avoiders(n, pattern)


def _counts_for_range(n_max: int, pattern: Perm, args: argparse.Namespace) -> list[int]:
    """Counts for n = 1..n_max, through the cache when one is configured."""
    path = _cache_path(args)
    cache = _load_cache(path)
    jobs = getattr(args, "jobs", 1)
    counts = []
    dirty = False
    for n in range(1, n_max + 1):
        key = _cache_key(pattern, n)
        if key in cache:
            counts.append(cache[key])
            continue
        value = _count_one(n, pattern, jobs)
        cache[key] = value
        counts.append(value)
        dirty = True
    if dirty:
        _store_cache(path, cache)
    return counts


# --- output helpers --------------------------------------------------------

def _emit_rows(fmt: str, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    if fmt == "json":
        body = [dict(zip(header, row)) for row in rows]
        print(json.dumps(body, indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


# --- subcommands -----------------------------------------------------------

def cmd_count(args: argparse.Namespace) -> int:
    counts = _counts_for_range(args.max, args.pattern, args)
    rows = [(n, str(s)) for n, s in enumerate(counts, 1)]
    _emit_rows(args.format, ("n", "avoiders"), rows)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    rows = [(n, format_perm(p))
            for n in range(1, args.max + 1)
            for p in enumerate_avoiders(n, args.pattern)]
    _emit_rows(args.format, ("n", "permutation"), rows)
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    pair = encode(args.permutation)
    if args.format == "json":
        print(json.dumps({"position_word": pair.position_word,
                          "value_word": pair.value_word}, indent=2))
    else:
        print(f"{pair.position_word} {pair.value_word}")
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    result = decode((args.position_word, args.value_word))
    if isinstance(result, DecodeFailure):
        print(f"decode failed [{result.stage}]: {result.reason}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps({"permutation": format_perm(result)}, indent=2))
    else:
        print(format_perm(result))
    return 0


def cmd_words(args: argparse.Namespace) -> int:
    counts = count_cb_free(args.max)
    rows = [(n, str(c)) for n, c in enumerate(counts)]
    _emit_rows(args.format, ("n", "words"), rows)
    return 0


def _build_reports(args: argparse.Namespace) -> list[CountReport]:
    counts = _counts_for_range(args.max, PATTERN_1324, args)
    return [verify_bounds(n, avoiders=s) for n, s in enumerate(counts, 1)]


def _asserted_ok(report: CountReport) -> bool:
    # Strictness against the squared word count fails at n = 1 by design
    # (both sides are 1), so that comparison is asserted from n = 2 on.
    checks = [report.ok_16, report.ok_headline, report.ok_pair_headline]
    if report.n >= 2:
        checks.append(report.ok_pair)
    return all(checks)


def _report_rows(reports: list[CountReport]) -> tuple[tuple[str, ...], list[tuple]]:
    header = ("n", "avoiders", "pair_bound", "bound_16", "headline",
              "ratio_pair", "ratio_16", "ratio_headline",
              "ok_pair", "ok_16", "ok_headline", "ok_pair_headline")
    rows = []
    for report in reports:
        d = report.to_dict()
        rows.append(tuple(str(d[key]).lower() if isinstance(d[key], bool) else d[key]
                          for key in header))
    return header, rows


def cmd_verify(args: argparse.Namespace) -> int:
    reports = _build_reports(args)
    if args.format == "csv":
        header, rows = _report_rows(reports)
        _emit_rows("csv", header, rows)
    else:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    failures = 0
    for report in reports:
        ok = _asserted_ok(report)
        failures += not ok
        print(f"n={report.n}: avoiders={report.avoiders} "
              f"{'ok' if ok else 'FAILED'}", file=sys.stderr)
    if failures:
        print(f"{failures} length(s) failed an asserted comparison", file=sys.stderr)
    return 1 if failures else 0


def cmd_report(args: argparse.Namespace) -> int:
    reports = _build_reports(args)
    pair_headline = all(pair_bound_below_headline(n)
                        for n in range(2, PAIR_HEADLINE_MAX + 1))
    document = {
        "schema_version": REPORT_SCHEMA_VERSION,
        "pattern": format_perm(PATTERN_1324),
        "n_max": args.max,
        "cb_free_counts": [str(c) for c in count_cb_free(args.max)],
        "reports": [r.to_dict() for r in reports],
        "growth": [{"n": r.n, "avoiders": str(r.avoiders),
                    "nth_root": r.avoiders ** (1.0 / r.n)} for r in reports],
        "pair_bound_below_headline_max": PAIR_HEADLINE_MAX,
        "pair_bound_below_headline": pair_headline,
        "reference_lower_growth": REFERENCE_LOWER_GROWTH,
    }
    text = json.dumps(document, indent=2) + "\n"
    if args.path == "-":
        sys.stdout.write(text)
    else:
        with open(args.path, "w", encoding="utf-8") as fh:
            fh.write(text)
    failures = sum(not _asserted_ok(r) for r in reports) + (not pair_headline)
    print(f"report for n <= {args.max}: "
          f"{'all asserted comparisons hold' if not failures else 'FAILURES'}",
          file=sys.stderr)
    return 1 if failures else 0


# --- parser ----------------------------------------------------------------

def _pattern_arg(text: str) -> Perm:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _perm_arg(text: str) -> Perm:
    return _pattern_arg(text)


def _add_format(parser: argparse.ArgumentParser, default: str = "csv") -> None:
    parser.add_argument("--format", choices=("csv", "json"), default=default,
                        help=f"output format (default {default})")


def _add_cache(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cache", metavar="PATH",
                        help=f"count cache file (default ${CACHE_ENV} "
                             f"or {DEFAULT_CACHE})")
    parser.add_argument("--no-cache", action="store_true",
                        help="do not read or write any cache")
    parser.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for counting (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcodec",
        description="Pattern-avoiding permutation counts, word codecs, "
                    "and exact bound checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count avoiders of a pattern for n = 1..MAX")
    p.add_argument("--pattern", type=_pattern_arg, default=PATTERN_1324)
    p.add_argument("--max", type=int, required=True, metavar="N")
    _add_format(p)
    _add_cache(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list avoiders of a pattern for n = 1..MAX")
    p.add_argument("--pattern", type=_pattern_arg, default=PATTERN_1324)
    p.add_argument("--max", type=int, required=True, metavar="N")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("encode", help="word pair of a permutation")
    p.add_argument("permutation", type=_perm_arg)
    _add_format(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="permutation of a word pair, if any")
    p.add_argument("position_word")
    p.add_argument("value_word")
    _add_format(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("words", help="CB-free word counts for lengths 0..MAX")
    p.add_argument("--max", type=int, required=True, metavar="N")
    _add_format(p)
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("verify", help="check every bound for n = 1..MAX")
    p.add_argument("--max", type=int, required=True, metavar="N")
    _add_format(p, default="json")
    _add_cache(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="write a full verification report as JSON")
    p.add_argument("path", help="output file, or - for stdout")
    p.add_argument("--max", type=int, required=True, metavar="N")
    _add_cache(p)
    p.set_defaults(func=cmd_report)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    n_max = getattr(args, "max", None)
    if n_max is not None:
        if args.command == "words":
            if n_max < 0:
                parser.error("--max must be non-negative")
        elif n_max < 1:
            parser.error("--max must be at least 1")
        elif n_max > DEFAULT_ENUMERATION_CAP and args.command != "words":
            parser.error(f"--max {n_max} exceeds the enumeration cap "
                         f"{DEFAULT_ENUMERATION_CAP}")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    if getattr(args, "position_word", None) is not None:
        try:
            as_type_word(args.position_word)
            as_type_word(args.value_word)
        except ValueError as exc:
            parser.error(str(exc))
        if not args.position_word or len(args.position_word) != len(args.value_word):
            parser.error("the two words must have equal positive length")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
