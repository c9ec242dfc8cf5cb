"""CB-free word counting: recurrence, brute force, series division,
closed form."""

from __future__ import annotations

from itertools import product

import mpmath
import pytest

from permcodec import (as_type_word, cb_free_closed_form, count_cb_free,
                       enumerate_cb_free, gf_coefficients, is_cb_free,
                       series_quotient)


def test_is_cb_free():
    assert is_cb_free("ABABBCD")
    assert is_cb_free("")
    assert not is_cb_free("ACBD")
    assert not is_cb_free("CB")
    assert is_cb_free("BC")


def test_as_type_word():
    assert as_type_word("ABCD") == "ABCD"
    assert as_type_word("") == ""
    with pytest.raises(ValueError):
        as_type_word("ABXE")


def test_counts_start_and_recurrence_shape():
    counts = count_cb_free(10)
    assert counts[:5] == [1, 4, 15, 56, 209]
    for n in range(2, 11):
        assert counts[n] == 4 * counts[n - 1] - counts[n - 2]
    assert count_cb_free(0) == [1]
    with pytest.raises(ValueError):
        count_cb_free(-1)


def test_length_two_count_by_hand():
    # all sixteen two-letter words minus the single bad one
    words = ["".join(t) for t in product("ABCD", repeat=2)]
    assert len(words) == 16
    assert sum(1 for w in words if "CB" not in w) == 15
    assert count_cb_free(2)[-1] == 15


def test_enumeration_matches_counts_and_is_complete():
    counts = count_cb_free(8)
    for n in range(0, 9):
        got = list(enumerate_cb_free(n))
        assert len(got) == counts[n]
        assert all(is_cb_free(w) and len(w) == n for w in got)
        assert got == sorted(got)  # lexicographic, A < B < C < D
    # full-scan completeness at a size where the scan is instant
    everything = {"".join(t) for t in product("ABCD", repeat=6) if "CB" not in "".join(t)}
    assert set(enumerate_cb_free(6)) == everything


def test_enumeration_small_lengths():
    assert list(enumerate_cb_free(0)) == [""]
    assert list(enumerate_cb_free(1)) == ["A", "B", "C", "D"]
    assert "CB" not in enumerate_cb_free(2)
    with pytest.raises(ValueError):
        list(enumerate_cb_free(11))


def test_series_division_is_generic():
    assert series_quotient([1], [1, -1], 6) == [1] * 7
    assert series_quotient([1, 1], [1, -1], 5) == [1, 2, 2, 2, 2, 2]
    assert series_quotient([1], [-1, 4, -1], 4) == [-1, -4, -15, -56, -209]
    with pytest.raises(ValueError):
        series_quotient([1], [2, 1], 3)
    with pytest.raises(ValueError):
        series_quotient([1], [], 3)


def test_generating_function_agrees_with_recurrence():
    assert gf_coefficients(60) == count_cb_free(60)
    assert gf_coefficients(3) == [1, 4, 15, 56]


def test_closed_form_rounds_to_exact_counts():
    counts = count_cb_free(40)
    # rounding must happen at the precision the values carry, not the
    # mpmath default, which would re-round 54-bit integers
    with mpmath.workdps(50):
        for n in range(41):
            approx = cb_free_closed_form(n)
            assert int(mpmath.nint(approx)) == counts[n]
            assert abs(approx - counts[n]) / counts[n] < 1e-9
    assert cb_free_closed_form(0) == 1
    assert cb_free_closed_form(1) == 4
    with pytest.raises(ValueError):
        cb_free_closed_form(-1)


def test_count_ratio_approaches_dominant_root():
    counts = count_cb_free(40)
    with mpmath.workdps(50):
        ratio = mpmath.mpf(counts[40]) / counts[39]
        assert abs(ratio - (2 + mpmath.sqrt(3))) < mpmath.mpf("1e-10")


def test_counts_exceed_64_bit_range_without_overflow():
    counts = count_cb_free(40)
    assert counts[40] > 2 ** 63
    assert all(c > 0 for c in counts)
