"""Shared brute-force oracles and CLI plumbing for the test suite.

Where a dual route is required, the oracle here stays independent of the
package's own search logic: containment by scanning every index subset,
coloring by re-scanning full prefixes, avoidance classes by filtering the
whole symmetric group.
"""

from __future__ import annotations

import contextlib
import io
from itertools import combinations, permutations


def rank_reduce(values):
    """Relative-order copy of a distinct-integer sequence using 1..k."""
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def naive_contains(p, q):
    """Containment by checking every index subset, no pruning."""
    target = rank_reduce(q)
    return any(rank_reduce(sub) == target for sub in combinations(p, len(q)))


def brute_avoiders(n, q):
    """Avoidance class by filtering all n! permutations, in lexicographic
    order."""
    from permcodec import avoids

    return [p for p in permutations(range(1, n + 1)) if avoids(p, q)]


def naive_color(p):
    """(colors, marks) by re-scanning the full red prefix at every step and
    recomputing extrema from scratch afterwards."""
    colors: list[str] = []
    reds: list[int] = []
    blues: list[int] = []
    for v in p:
        closes_132 = any(x < v < y for i, x in enumerate(reds) for y in reds[i + 1:])
        if closes_132 or any(b < v for b in blues):
            colors.append("blue")
            blues.append(v)
        else:
            colors.append("red")
            reds.append(v)

    a_values = set()
    lowest = None
    for x in reds:
        if lowest is None or x < lowest:
            a_values.add(x)
            lowest = x
    d_values = set()
    highest = None
    for x in reversed(blues):
        if highest is None or x > highest:
            d_values.add(x)
            highest = x

    marks = tuple(
        ("A" if v in a_values else "B") if c == "red" else ("D" if v in d_values else "C")
        for v, c in zip(p, colors)
    )
    return tuple(colors), marks


def run_cli(argv):
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    from permcodec.cli import main

    out, err = io.StringIO(), io.StringIO()
    code = 0
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()
