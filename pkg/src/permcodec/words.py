"""Counting and enumerating CB-free words over the alphabet {A, B, C, D}.

A word is CB-free when no letter C is immediately followed by a letter B.
Three independent routes to the counts live here: the two-term linear
recurrence, literal power-series long division of the generating function
1 / (1 - 4x + x^2), and a closed form in extended precision.  Counts are
exact Python integers throughout; they leave 64-bit range near length 34.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product

import mpmath

ALPHABET = "ABCD"

# 4^n words are scanned, so brute-force enumeration stops here by default.
ENUMERATION_CAP = 10

# Comfortably above the 64-significand-bit floor; exact integer rounding of
# the closed form at length 40 already needs ~78 bits.
_DPS = 50


def as_type_word(word: str) -> str:
    """Validate a word over ABCD (empty allowed) and return it unchanged."""
    bad = set(word) - set(ALPHABET)
    if bad:
        raise ValueError(f"letters outside ABCD: {sorted(bad)!r}")
    return word


def is_cb_free(word: str) -> bool:
    """True iff no C is immediately followed by a B.

    >>> is_cb_free("ABABBCD"), is_cb_free(""), is_cb_free("ACBD")
    (True, True, False)
    """
    return "CB" not in word


def count_cb_free(n_max: int) -> list[int]:
    """Counts of CB-free words for every length 0..n_max.

    Appending any of the four letters to a CB-free word stays CB-free
    except when it creates a trailing CB, so each count is four times the
    previous minus the one before that.

    >>> count_cb_free(4)
    [1, 4, 15, 56, 209]
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    counts = [1, 4]
    while len(counts) <= n_max:
        counts.append(4 * counts[-1] - counts[-2])
    return counts[: n_max + 1]


def enumerate_cb_free(n: int, *, cap: int = ENUMERATION_CAP) -> Iterator[str]:
    """All CB-free words of length n, lexicographic with A < B < C < D.

    Brute-force scan of all 4^n words; the oracle for :func:`count_cb_free`.
    """
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    if n > cap:
        raise ValueError(f"length {n} exceeds the enumeration cap {cap}")
    for letters in product(ALPHABET, repeat=n):
        word = "".join(letters)
        if is_cb_free(word):
            yield word


def series_quotient(numerator: Sequence[int], denominator: Sequence[int],
                    n_max: int) -> list[int]:
    """Taylor coefficients 0..n_max of numerator/denominator, exactly.

    Literal power-series long division over the integers; the constant term
    of the denominator must be a unit so every step stays exact.
    """
    if not denominator or denominator[0] not in (1, -1):
        raise ValueError("denominator must start with 1 or -1 for exact division")
    lead = denominator[0]
    coeffs: list[int] = []
    for k in range(n_max + 1):
        acc = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[j] * coeffs[k - j]
        coeffs.append(acc // lead)
    return coeffs


def gf_coefficients(n_max: int) -> list[int]:
    """Coefficients 0..n_max of 1 / (1 - 4x + x^2).

    Independent cross-check of :func:`count_cb_free`: same numbers, reached
    by series division instead of the recurrence.

    >>> gf_coefficients(3)
    [1, 4, 15, 56]
    """
    return series_quotient([1], [1, -4, 1], n_max)


def cb_free_closed_form(n: int) -> mpmath.mpf:
    """Closed-form CB-free count at length n, as an extended-precision real.

    Evaluates ((3 + 2*sqrt(3)) / 6) * (2 + sqrt(3))^n plus the conjugate
    term.  Rounding to the nearest integer reproduces the exact count for
    n <= 40, the validated envelope at the working precision.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    with mpmath.workdps(_DPS):
        root3 = mpmath.sqrt(3)
        large = (3 + 2 * root3) / 6 * (2 + root3) ** n
        small = (3 - 2 * root3) / 6 * (2 - root3) ** n
        return large + small
