"""
Tests for the example generators and the gap-series checks
"""

import math
import pytest
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core.constructions import (
    c_index,
    count_power_of_two_sums,
    factorial_series,
    liouville_power,
    liouville_series,
    padic_superfactorial_growth,
    padic_superfactorial_series,
    superfactorial_growth,
    superfactorial_series,
    support_nesting,
    verify_gap_claims,
    verify_gap_punchline,
)
from core.errors import UsageError
from core.exactnum import AbsValue
from core.growth import eval_log_abs
from core.series import Series, SeriesPoly


@pytest.mark.parametrize("p,q,expected", [
    (2, 3, 6),
    (1, 5, 16),
    (3, 5, 28),
    (2, 10, 768),
])
def test_c_index(p, q, expected):
    assert c_index(p, q) == expected


def test_c_index_binary_digits():
    for q in range(2, 11):
        for p in range(1, q):
            assert bin(c_index(p, q)).count("1") == p


@pytest.mark.parametrize("p,q", [(0, 3), (3, 3), (4, 2)])
def test_c_index_rejects_bad_pairs(p, q):
    with pytest.raises(UsageError):
        c_index(p, q)


def test_liouville_series():
    L = liouville_series(20)
    assert L.support == (1, 2, 4, 8, 16)
    assert liouville_series(200).is_sparse
    with pytest.raises(UsageError):
        liouville_series(0)


def test_liouville_square_counts_ordered_pairs():
    square = liouville_power(2, 40)
    for n in range(41):
        assert square[n] == count_power_of_two_sums(n, 2, 6)


def test_factorial_series():
    X = factorial_series(10)
    assert X[0] == 1
    assert X[10] == math.factorial(10)


def test_superfactorial_series_matches_growth():
    X = superfactorial_series(8)
    growth = superfactorial_growth()
    for n in range(9):
        assert eval_log_abs(growth, n).encloses(X[n])
    with pytest.raises(UsageError):
        superfactorial_series(9)


def test_padic_superfactorial_series_matches_growth():
    X = padic_superfactorial_series(6)
    growth = padic_superfactorial_growth()
    two_adic = AbsValue.padic(2)
    assert growth.abs_value == two_adic
    for n in range(7):
        assert X[n] == Fraction(1, 2 ** math.factorial(n))
        assert eval_log_abs(growth, n).encloses(two_adic(X[n]))


def test_count_power_of_two_sums():
    assert count_power_of_two_sums(6, 2, 3) == 2
    assert count_power_of_two_sums(7, 3, 3) == 6
    assert count_power_of_two_sums(3, 1, 4) == 0


@pytest.mark.parametrize("p,q", [(p, q) for q in range(2, 11) for p in range(1, min(q, 5))])
def test_gap_claims_small_cases(p, q):
    report = verify_gap_claims(p, q)
    assert report.observed_value == math.factorial(p)
    assert report.value_matches_oracle
    assert report.lower_powers_vanish
    assert report.zero_window_radius_verified >= 2 ** (q - p - 1)
    assert report.claimed_value == math.factorial(q)
    assert report.passed


def test_gap_claims_radius_counterexample():
    report = verify_gap_claims(2, 4)
    assert report.c_index == 12
    assert report.zero_window_radius_verified == 2
    assert not report.paper_radius_holds
    assert (2, 10, Fraction(2)) in report.counterexamples
    assert report.counterexample_total >= 1
    assert report.passed


def test_gap_claims_caps():
    with pytest.raises(UsageError):
        verify_gap_claims(5, 8)
    with pytest.raises(UsageError):
        verify_gap_claims(2, 15)
    with pytest.raises(UsageError):
        verify_gap_claims(2, 4, d_max=-1)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_support_nesting_fails_only_at_p_minus_one(p):
    assert support_nesting(p, 64) == [p - 1]


def test_gap_claims_report_nesting_exceptions():
    assert verify_gap_claims(3, 7).support_nesting_exceptions == [2]


def test_punchline_example():
    order = 2
    A = SeriesPoly([Series([3], order), Series([0, 1], order), Series([1, 1], order)])
    report = verify_gap_punchline(A, 2, 10)
    assert report.status == "PASS"
    assert (report.n, report.d) == (0, 1)
    assert report.lhs == report.rhs == 2
    assert report.equal and report.nonzero


def test_punchline_needs_wider_window():
    z = Series([0, 1, 0], 2)
    zero = Series.zero(2)
    A = SeriesPoly([zero, zero, zero, z])
    report = verify_gap_punchline(A, 3, 4)
    assert report.status == "INCONCLUSIVE"
    assert report.required_radius == 3
    assert report.required_q == 6
    assert report.lhs is None

    wider = verify_gap_punchline(A, 3, report.required_q)
    assert wider.status == "PASS"
    assert wider.lhs == wider.rhs == 6


def test_punchline_rejects_bad_polynomials():
    one, zero = Series.one(2), Series.zero(2)
    with pytest.raises(UsageError):
        verify_gap_punchline(SeriesPoly([one, zero, zero]), 2, 6)
    with pytest.raises(UsageError):
        verify_gap_punchline(SeriesPoly([one, one]), 2, 6)


if __name__ == "__main__":
    pytest.main([__file__])
