"""Permutations in one-line notation: pattern containment, extrema, and
avoidance-class enumeration.

A permutation of length n is a tuple of the values 1..n, each appearing
exactly once.  Containment checks accept any sequence of distinct integers
and compare by relative order only.  The search routines are deliberately
plain backtracking: they are the trusted oracle everything else in the
package is tested against, so clarity beats asymptotics here.  All
functions are pure and safe for concurrent use.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

# Keeps exhaustive enumeration at desk scale; raise per call if you need more.
DEFAULT_ENUMERATION_CAP = 11


class EnumerationCapError(ValueError):
    """Enumeration was requested above the configured length cap."""


def as_perm(entries: Iterable[int]) -> Perm:
    """Validate one-line notation: the values 1..n in some order, n >= 1.

    >>> as_perm([3, 1, 2])
    (3, 1, 2)
    """
    p = tuple(entries)
    n = len(p)
    if n == 0:
        raise ValueError("empty permutation is not supported")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p!r}")
    return p


def contains(p: Sequence[int], q: Sequence[int]) -> bool:
    """Does p contain the pattern q?

    True iff some index subsequence of p is ordered like q, i.e. there are
    indices i_1 < ... < i_k with p[i_a] < p[i_b] exactly when q[a] < q[b].
    Depth-first search over index subsequences, pruning as soon as a
    partial match breaks order-isomorphism.

    >>> contains((2, 5, 3, 7, 1, 6, 4), (1, 2, 3, 4))
    False
    >>> contains((3, 6, 1, 2, 7, 4, 5), (1, 3, 2, 4))
    False
    >>> contains((1, 3, 2, 4), (1, 3, 2, 4))
    True
    """
    n, k = len(p), len(q)
    if k > n:
        return False
    chosen: list[int] = []

    def extend(a: int, start: int) -> bool:
        if a == k:
            return True
        qa = q[a]
        for j in range(start, n - (k - a) + 1):
            pj = p[j]
            if all((p[i] < pj) == (q[b] < qa) for b, i in enumerate(chosen)):
                chosen.append(j)
                if extend(a + 1, j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def avoids(p: Sequence[int], q: Sequence[int]) -> bool:
    """Negation of :func:`contains`.

    >>> avoids((2, 5, 3, 7, 1, 6, 4), (1, 2, 3, 4))
    True
    """
    return not contains(p, q)


def ltr_minima(p: Sequence[int]) -> list[tuple[int, int]]:
    """Left-to-right minima of p as (position, value) pairs, positions 1-based.

    An entry is a left-to-right minimum when it is smaller than every entry
    before it; the first entry always qualifies, and the values are strictly
    decreasing in position order.

    >>> ltr_minima((3, 5, 1, 6, 2, 4))
    [(1, 3), (3, 1)]
    """
    out: list[tuple[int, int]] = []
    current = math.inf
    for i, v in enumerate(p, 1):
        if v < current:
            out.append((i, v))
            current = v
    return out


def rtl_maxima(p: Sequence[int]) -> list[tuple[int, int]]:
    """Right-to-left maxima of p as (position, value) pairs, positions 1-based.

    An entry is a right-to-left maximum when it is larger than every entry
    after it; the last entry always qualifies.  Read in position order the
    values are strictly decreasing.

    >>> rtl_maxima((3, 5, 1, 6, 2, 4))
    [(4, 6), (6, 4)]
    >>> rtl_maxima((4, 5))
    [(2, 5)]
    """
    out: list[tuple[int, int]] = []
    current = 0
    for i in range(len(p), 0, -1):
        if p[i - 1] > current:
            out.append((i, p[i - 1]))
            current = p[i - 1]
    out.reverse()
    return out


def _occurrence_ends_at_last(prefix: Sequence[int], q: Sequence[int]) -> bool:
    """Does some occurrence of q in prefix use the final position?

    Incremental pruning hook for prefix backtracking: when entries are added
    one at a time, any new occurrence must end at the newest entry.
    """
    k = len(q)
    m = len(prefix)
    if k > m:
        return False
    last = prefix[-1]
    q_last = q[k - 1]
    chosen: list[int] = []

    def extend(a: int, start: int) -> bool:
        if a == k - 1:
            return True
        qa = q[a]
        for j in range(start, m - (k - 1 - a)):
            pj = prefix[j]
            if (pj < last) != (qa < q_last):
                continue
            if all((prefix[i] < pj) == (q[b] < qa) for b, i in enumerate(chosen)):
                chosen.append(j)
                if extend(a + 1, j + 1):
                    return True
                chosen.pop()
        return False

    return extend(0, 0)


def _complete_avoiders(n: int, q: Perm, prefix: list[int],
                       used: list[bool]) -> Iterator[Perm]:
    # Candidates tried in increasing order, so the stream is lexicographic.
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for v in range(1, n + 1):
        if used[v]:
            continue
        prefix.append(v)
        used[v] = True
        if not _occurrence_ends_at_last(prefix, q):
            yield from _complete_avoiders(n, q, prefix, used)
        prefix.pop()
        used[v] = False


def enumerate_avoiders(n: int, q: Sequence[int], *,
                       cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Perm]:
    """All length-n permutations avoiding the pattern q, lexicographically.

    Prefix backtracking: a branch is cut as soon as the newest entry
    completes an occurrence of q, which is the only way a previously clean
    prefix can stop avoiding.  Each avoider is yielded exactly once.
    """
    pattern = as_perm(q)
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")
    if n > cap:
        raise EnumerationCapError(f"length {n} exceeds the enumeration cap {cap}")
    yield from _complete_avoiders(n, pattern, [], [False] * (n + 1))


def count_avoiders(n: int, q: Sequence[int], *,
                   cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Exact number of length-n permutations avoiding q.

    >>> count_avoiders(6, (1, 3, 2, 4))
    513
    """
    return sum(1 for _ in enumerate_avoiders(n, q, cap=cap))


def count_avoiders_with_first(first: int, n: int, q: Sequence[int], *,
                              cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Number of length-n avoiders of q whose first entry is `first`.

    Splitting the count by first entry lets callers spread the work over
    processes; the per-first counts sum to :func:`count_avoiders`.
    """
    pattern = as_perm(q)
    if not 1 <= first <= n:
        raise ValueError(f"first entry {first} outside 1..{n}")
    if n > cap:
        raise EnumerationCapError(f"length {n} exceeds the enumeration cap {cap}")
    prefix = [first]
    if _occurrence_ends_at_last(prefix, pattern):
        return 0
    used = [False] * (n + 1)
    used[first] = True
    return sum(1 for _ in _complete_avoiders(n, pattern, prefix, used))


def catalan(n: int) -> int:
    """The nth Catalan number, binom(2n, n) / (n + 1); C_0 = 1.

    Counts, among much else, the avoiders of any single length-3 pattern.

    >>> [catalan(n) for n in range(10)]
    [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return math.comb(2 * n, n) // (n + 1)
