"""Exact verification of the avoider-count bounds for the pattern 1324.

Every pass/fail comparison against a sqrt(3)-valued bound is decided in
the ring of integer pairs a + b*sqrt(3); floating point appears only in
informational report fields.  The three checks per length n: the avoider
count against the squared CB-free word count at length n-1, against 16^n,
and against (7 + 4*sqrt(3))^n, which is (2 + sqrt(3))^2 per letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Any

import mpmath

from .codec import PATTERN_1324
from .perms import DEFAULT_ENUMERATION_CAP, count_avoiders
from .words import count_cb_free

_DPS = 50


@total_ordering
class ZSqrt3:
    """a + b*sqrt(3) with integer a, b; ordered exactly without floats.

    >>> ZSqrt3(2, 1) ** 2 == ZSqrt3(7, 4)
    True
    >>> ZSqrt3(0, 4) < ZSqrt3(7)
    True
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        self.a = a
        self.b = b

    def __repr__(self) -> str:
        return f"ZSqrt3({self.a}, {self.b})"

    def sign(self) -> int:
        # sqrt(3) is irrational, so a^2 = 3 b^2 only at the origin and
        # comparing squares settles every mixed-sign case exactly.
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        if a > 0:  # b < 0
            return 1 if a * a > 3 * b * b else -1
        return 1 if 3 * b * b > a * a else -1

    @staticmethod
    def _coerce(other: Any) -> "ZSqrt3 | None":
        if isinstance(other, ZSqrt3):
            return other
        if isinstance(other, int):
            return ZSqrt3(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __add__(self, other: "ZSqrt3 | int") -> "ZSqrt3":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "ZSqrt3":
        return ZSqrt3(-self.a, -self.b)

    def __sub__(self, other: "ZSqrt3 | int") -> "ZSqrt3":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: "ZSqrt3 | int") -> "ZSqrt3":
        return (-self) + other

    def __mul__(self, other: "ZSqrt3 | int") -> "ZSqrt3":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ZSqrt3(self.a * o.a + 3 * self.b * o.b,
                      self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ZSqrt3":
        if exponent < 0:
            raise ValueError("negative powers leave the ring")
        result = ZSqrt3(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_mpf(self) -> mpmath.mpf:
        """Extended-precision float value, for reporting only."""
        with mpmath.workdps(_DPS):
            return mpmath.mpf(self.a) + mpmath.mpf(self.b) * mpmath.sqrt(3)


# Per-letter growth base of the headline bound, (2 + sqrt(3))^2.
BOUND_BASE = ZSqrt3(7, 4)

# Best published lower-growth constant, reported for context only; nothing
# at desk scale can confirm or refute an asymptotic statement.
REFERENCE_LOWER_GROWTH = 9.42


def headline_value(n: int) -> mpmath.mpf:
    """(7 + 4*sqrt(3))^n as an extended-precision real, for reports."""
    return (BOUND_BASE ** n).to_mpf()


@dataclass(frozen=True)
class CountReport:
    """Exact counts and bounds for one length; pass flags and ratios are
    recomputed from the stored numbers on every access."""

    n: int
    avoiders: int    # |Av_n(1324)|
    pair_bound: int  # squared count of CB-free words of length n - 1
    bound_16: int    # 16^n

    @property
    def headline(self) -> mpmath.mpf:
        return headline_value(self.n)

    @property
    def ok_pair(self) -> bool:
        return self.avoiders < self.pair_bound

    @property
    def ok_16(self) -> bool:
        return self.avoiders < self.bound_16

    @property
    def ok_headline(self) -> bool:
        return ZSqrt3(self.avoiders) < BOUND_BASE ** self.n

    @property
    def ok_pair_headline(self) -> bool:
        return ZSqrt3(self.pair_bound) < BOUND_BASE ** self.n

    @property
    def ratio_pair(self) -> float:
        return self.avoiders / self.pair_bound

    @property
    def ratio_16(self) -> float:
        return self.avoiders / self.bound_16

    @property
    def ratio_headline(self) -> float:
        with mpmath.workdps(_DPS):
            return float(self.avoiders / self.headline)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready view; exact counts as decimal strings."""
        return {
            "n": self.n,
            "avoiders": str(self.avoiders),
            "pair_bound": str(self.pair_bound),
            "bound_16": str(self.bound_16),
            "headline": mpmath.nstr(self.headline, 25),
            "ratio_pair": self.ratio_pair,
            "ratio_16": self.ratio_16,
            "ratio_headline": self.ratio_headline,
            "ok_pair": self.ok_pair,
            "ok_16": self.ok_16,
            "ok_headline": self.ok_headline,
            "ok_pair_headline": self.ok_pair_headline,
        }


def verify_bounds(n: int, *, avoiders: int | None = None,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> CountReport:
    """Report for one length, comparing the avoider count to every bound.

    The report is emitted even when a comparison fails; at n = 1 the count
    equals the squared word count exactly, so strictness fails there and
    callers assert ok_pair only from n = 2 on.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if avoiders is None:
        avoiders = count_avoiders(n, PATTERN_1324, cap=cap)
    pair_bound = count_cb_free(n - 1)[-1] ** 2
    return CountReport(n=n, avoiders=avoiders, pair_bound=pair_bound,
                       bound_16=16 ** n)


def verify_16(n: int, *, avoiders: int | None = None,
              cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Exact integer check: avoider count below 16^n."""
    return verify_bounds(n, avoiders=avoiders, cap=cap).ok_16


def verify_headline(n: int, *, avoiders: int | None = None,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Exact check that both the avoider count and the squared word count
    stay below (7 + 4*sqrt(3))^n."""
    report = verify_bounds(n, avoiders=avoiders, cap=cap)
    return report.ok_headline and report.ok_pair_headline


def pair_bound_below_headline(n: int) -> bool:
    """Squared CB-free count at n - 1 below (7 + 4*sqrt(3))^n, exactly.

    Cheap at any n: no enumeration involved, so this scales far past the
    avoider-count cap.

    >>> all(pair_bound_below_headline(n) for n in range(2, 61))
    True
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    pair_bound = count_cb_free(n - 1)[-1] ** 2
    return ZSqrt3(pair_bound) < BOUND_BASE ** n


def growth_table(n_max: int, *,
                 cap: int = DEFAULT_ENUMERATION_CAP) -> list[tuple[int, int, float]]:
    """(n, avoider count, n-th root of the count) for n = 1..n_max.

    Informational only: the n-th roots creep upward and say nothing about
    the limit at desk scale.
    """
    table = []
    for n in range(1, n_max + 1):
        s = count_avoiders(n, PATTERN_1324, cap=cap)
        table.append((n, s, s ** (1.0 / n)))
    return table
