"""Greedy red/blue coloring of a permutation and the four-letter marking.

The coloring sweeps left to right.  An entry turns blue when keeping it red
would close a 132-pattern among the red entries, or when a smaller blue
entry already exists; otherwise it stays red.  The red subsequence avoids
132 unconditionally; the blue subsequence avoids 213 whenever the input
avoids 1324 (not in general: 14325 colors its blues to 325).

Marks refine the colors: red entries are A (left-to-right minima of the red
subsequence) or B, blue entries are D (right-to-left maxima of the blue
subsequence) or C.  Reading the marks by position gives the position word;
reading them by value gives the value word.  Words serialize as plain
uppercase strings over ABCD.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .perms import Perm, as_perm, ltr_minima, rtl_maxima

RED = "red"
BLUE = "blue"
MARKS = "ABCD"


@dataclass(frozen=True)
class ColoredPermutation:
    """A permutation with a color and a mark at every position."""

    perm: Perm
    colors: tuple[str, ...]
    marks: tuple[str, ...]

    def __post_init__(self) -> None:
        if not (len(self.perm) == len(self.colors) == len(self.marks)):
            raise ValueError("colors and marks must match the permutation length")

    def red_subsequence(self) -> Perm:
        return tuple(v for v, c in zip(self.perm, self.colors) if c == RED)

    def blue_subsequence(self) -> Perm:
        return tuple(v for v, c in zip(self.perm, self.colors) if c == BLUE)


def _closes_red_132(minima: Sequence[int], max_after: Sequence[int], v: int) -> bool:
    # v closes a red 132 as its final (middle) entry iff some red x < v < y
    # exists with x before y.  It suffices to test red left-to-right minima
    # as x, paired with the largest red entry seen after each.  The minima
    # are decreasing and their paired maxima are non-increasing, so the
    # first minimum below v carries the largest usable y.
    for m, top in zip(minima, max_after):
        if m < v:
            return top > v
    return False


def color(p: Sequence[int]) -> ColoredPermutation:
    """Apply the coloring rules, then assign all four marks.

    The rules are total: p does not need to avoid 1324.  The A/B marks
    depend only on the red prefix, but D/C need right-to-left maxima of the
    complete blue subsequence, so all marks are assigned in a second pass.

    >>> cp = color((3, 6, 1, 2, 7, 4, 5))
    >>> cp.red_subsequence(), cp.blue_subsequence()
    ((3, 6, 1, 2, 7), (4, 5))
    """
    perm = as_perm(p)
    colors: list[str] = []
    minima: list[int] = []     # red left-to-right minima, in position order
    max_after: list[int] = []  # per minimum: largest red entry seen after it
    min_blue = 0               # smallest blue value so far; 0 = none yet
    for v in perm:
        if _closes_red_132(minima, max_after, v) or 0 < min_blue < v:
            colors.append(BLUE)
            if min_blue == 0 or v < min_blue:
                min_blue = v
        else:
            colors.append(RED)
            for t, top in enumerate(max_after):
                if v > top:
                    max_after[t] = v
            if not minima or v < minima[-1]:
                minima.append(v)
                max_after.append(0)

    reds = [v for v, c in zip(perm, colors) if c == RED]
    blues = [v for v, c in zip(perm, colors) if c == BLUE]
    a_values = {v for _, v in ltr_minima(reds)} if reds else set()
    d_values = {v for _, v in rtl_maxima(blues)} if blues else set()
    marks = tuple(
        ("A" if v in a_values else "B") if c == RED else ("D" if v in d_values else "C")
        for v, c in zip(perm, colors)
    )
    return ColoredPermutation(perm, tuple(colors), marks)


def position_word(cp: ColoredPermutation) -> str:
    """Marks read off by position: letter i is the mark of the i-th entry.

    >>> position_word(color((3, 6, 1, 2, 7, 4, 5)))
    'ABABBCD'
    """
    return "".join(cp.marks)


def value_word(cp: ColoredPermutation) -> str:
    """Marks read off by value: letter i is the mark of the entry i.

    >>> value_word(color((3, 6, 1, 2, 7, 4, 5)))
    'ABACDBB'
    """
    mark_of = {v: m for v, m in zip(cp.perm, cp.marks)}
    return "".join(mark_of[v] for v in range(1, len(cp.perm) + 1))
