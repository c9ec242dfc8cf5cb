"""Permutation/word codecs.

The main codec pairs a permutation with its position word and value word;
on 1324-avoiders the pair pins down the permutation, and :func:`decode`
rebuilds it by greedy placement: A and D values drop into their positions
in decreasing order, B positions take (left to right) the smallest unused
B value above the nearest A entry on the left, C positions take (right to
left) the largest unused C value below the nearest D entry on the right.
Any other choice would close a red 132 or a blue 213.

Word pairs outside the image are expected inputs, not bugs, so decode
returns a :class:`DecodeFailure` value instead of raising; the failure
stage says whether the letter counts clashed, the greedy fill got stuck,
or the verified candidate did not reproduce the pair.

The binary codec for 132-avoiders (zeros at left-to-right minima, read by
position and by value) and its greedy inverse live here too, with the
213-avoiding twin obtained by reverse-complement symmetry.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .coloring import color, position_word, value_word
from .perms import Perm, as_perm, contains, ltr_minima, rtl_maxima
from .words import ALPHABET, as_type_word

PATTERN_1324: Perm = (1, 3, 2, 4)


class CodePair(NamedTuple):
    """The two equal-length words encoding a permutation."""

    position_word: str
    value_word: str


@dataclass(frozen=True)
class DecodeFailure:
    """Why a word pair could not be decoded; stage is one of
    "shape", "greedy", "verify"."""

    stage: str
    reason: str


def encode(p: Sequence[int]) -> CodePair:
    """Position word and value word of the colored permutation.

    Total on all permutations; injective on 1324-avoiders.

    >>> encode((3, 6, 1, 2, 7, 4, 5))
    CodePair(position_word='ABABBCD', value_word='ABACDBB')
    """
    cp = color(p)
    return CodePair(position_word(cp), value_word(cp))


def decode(code: tuple[str, str], *, verify: bool = True) -> Perm | DecodeFailure:
    """Rebuild the unique 1324-avoider with the given word pair, if any.

    With verify=True (always, outside benchmarking) the candidate is
    re-encoded and checked to avoid 1324 before being returned.

    >>> decode(("ABABBCD", "ABACDBB"))
    (3, 6, 1, 2, 7, 4, 5)
    """
    w, z = code
    w = as_type_word(w)
    z = as_type_word(z)
    n = len(w)
    if n == 0 or len(z) != n:
        raise ValueError("the two words must have equal positive length")

    positions = {letter: [] for letter in ALPHABET}
    for i, letter in enumerate(w):
        positions[letter].append(i)
    values = {letter: [] for letter in ALPHABET}
    for v, letter in enumerate(z, 1):
        values[letter].append(v)
    if any(len(positions[x]) != len(values[x]) for x in ALPHABET):
        counts = {x: (len(positions[x]), len(values[x])) for x in ALPHABET}
        return DecodeFailure("shape", f"letter counts differ between words: {counts}")

    out = [0] * n
    for i, v in zip(positions["A"], reversed(values["A"])):
        out[i] = v
    for i, v in zip(positions["D"], reversed(values["D"])):
        out[i] = v

    a_positions = positions["A"]
    b_pool = list(values["B"])  # ascending
    for i in positions["B"]:
        t = bisect_left(a_positions, i)
        if t == 0:
            return DecodeFailure("greedy", f"no A entry left of position {i + 1}")
        floor = out[a_positions[t - 1]]
        s = bisect_right(b_pool, floor)
        if s == len(b_pool):
            return DecodeFailure(
                "greedy", f"no unused B value above {floor} for position {i + 1}")
        out[i] = b_pool.pop(s)

    d_positions = positions["D"]
    c_pool = list(values["C"])  # ascending
    for i in reversed(positions["C"]):
        t = bisect_right(d_positions, i)
        if t == len(d_positions):
            return DecodeFailure("greedy", f"no D entry right of position {i + 1}")
        ceiling = out[d_positions[t]]
        s = bisect_left(c_pool, ceiling)
        if s == 0:
            return DecodeFailure(
                "greedy", f"no unused C value below {ceiling} for position {i + 1}")
        out[i] = c_pool.pop(s - 1)

    candidate = tuple(out)
    if verify:
        if contains(candidate, PATTERN_1324):
            return DecodeFailure("verify", "candidate contains 1324")
        if encode(candidate) != (w, z):
            return DecodeFailure("verify", "re-encoding does not reproduce the pair")
    return candidate


def uv_encode_132(p: Sequence[int]) -> tuple[str, str]:
    """Binary words for a 132-avoider: 0 marks a left-to-right minimum,
    first by position, then by value.

    >>> uv_encode_132((4, 3, 5, 6, 1, 2))
    ('001101', '010011')
    """
    perm = as_perm(p)
    if contains(perm, (1, 3, 2)):
        raise ValueError("permutation contains 132")
    minima = ltr_minima(perm)
    min_positions = {i for i, _ in minima}
    min_values = {v for _, v in minima}
    n = len(perm)
    u = "".join("0" if i in min_positions else "1" for i in range(1, n + 1))
    v = "".join("0" if x in min_values else "1" for x in range(1, n + 1))
    return u, v


def reconstruct_132(minima_values: Iterable[int], minima_positions: Iterable[int],
                    n: int) -> Perm | None:
    """The unique 132-avoider of length n with exactly these left-to-right
    minima (values and 1-based positions), or None when no such avoider
    exists.

    Minima go into their positions in decreasing order; the remaining
    positions are filled left to right with the smallest unused value above
    the nearest minimum on the left (anything larger would close a 132).

    >>> reconstruct_132({1, 3, 4}, {1, 2, 5}, 6)
    (4, 3, 5, 6, 1, 2)
    """
    values = sorted(set(minima_values), reverse=True)
    pos = sorted(set(minima_positions))
    if len(values) != len(pos) or not values:
        raise ValueError("need equally many distinct minima values and positions")
    if not (1 <= values[-1] and values[0] <= n and 1 <= pos[0] and pos[-1] <= n):
        raise ValueError(f"minima must lie within 1..{n}")
    if values[-1] != 1 or pos[0] != 1:
        raise ValueError("value 1 and position 1 are always left-to-right minima")

    out = [0] * n
    for i, v in zip(pos, values):
        out[i - 1] = v
    position_set = set(pos)
    remaining = sorted(set(range(1, n + 1)) - set(values))
    nearest_min = 0
    for i in range(n):
        if i + 1 in position_set:
            nearest_min = out[i]
            continue
        s = bisect_right(remaining, nearest_min)
        if s == len(remaining):
            return None
        out[i] = remaining.pop(s)

    candidate = tuple(out)
    if ltr_minima(candidate) != list(zip(pos, values)):
        return None
    if contains(candidate, (1, 3, 2)):
        return None
    return candidate


def _reverse_complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def reconstruct_213(maxima_values: Iterable[int], maxima_positions: Iterable[int],
                    n: int) -> Perm | None:
    """The unique 213-avoider of length n with exactly these right-to-left
    maxima, or None.

    Reverse-complement turns 213-avoiders into 132-avoiders and swaps
    right-to-left maxima for left-to-right minima, so one greedy fill
    serves both codecs.

    >>> reconstruct_213({1, 2, 3}, {1, 2, 3}, 3)  # every entry a maximum
    (3, 2, 1)
    >>> reconstruct_213({3}, {3}, 3)
    (1, 2, 3)
    """
    values = sorted(set(maxima_values), reverse=True)
    pos = sorted(set(maxima_positions))
    if len(values) != len(pos) or not values:
        raise ValueError("need equally many distinct maxima values and positions")
    if not (1 <= values[-1] and values[0] <= n and 1 <= pos[0] and pos[-1] <= n):
        raise ValueError(f"maxima must lie within 1..{n}")
    if values[0] != n or pos[-1] != n:
        raise ValueError("value n and position n are always right-to-left maxima")

    base = reconstruct_132({n + 1 - v for v in values}, {n + 1 - i for i in pos}, n)
    if base is None:
        return None
    candidate = _reverse_complement(base)
    if rtl_maxima(candidate) != list(zip(pos, values)):
        return None
    if contains(candidate, (2, 1, 3)):
        return None
    return candidate
