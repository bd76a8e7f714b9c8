"""
Tests for growth laws, criteria margins, the division bound and the classifier
"""

import math
import pytest
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core.constructions import (
    factorial_series,
    padic_superfactorial_growth,
    superfactorial_growth,
)
from core.decomp import decompose
from core.errors import DomainError, PreconditionError, UsageError
from core.exactnum import POS_INFINITY, AbsValue, LogMagInterval, log2_interval
from core.growth import (
    FactorialExponentGrowth,
    FactorialRho,
    GeometricGrowth,
    GeometricRho,
    MarginKind,
    OneRho,
    PolynomialRho,
    SeriesGrowth,
    TableGrowth,
    TableRho,
    Verdict,
    check_criteria,
    check_prop1_bound,
    classify_growth,
    decomposition_margins,
    eval_log_abs,
    irrationality_witness,
    judge,
    margin,
    sum_log_abs,
)
from core.series import Series, SeriesPoly, divide


def test_eval_log_abs_variants():
    assert eval_log_abs(FactorialExponentGrowth(Fraction(1)), 3) == LogMagInterval(6, 6)
    assert eval_log_abs(GeometricGrowth(Fraction(0)), 17) == LogMagInterval(0, 0)
    four_factorial = eval_log_abs(SeriesGrowth(factorial_series(6)), 4)
    assert four_factorial.encloses(24)


def test_eval_log_abs_domains():
    table = TableGrowth((LogMagInterval(0, 0), LogMagInterval(1, 2)))
    assert eval_log_abs(table, 1) == LogMagInterval(1, 2)
    with pytest.raises(DomainError):
        eval_log_abs(table, 2)
    with pytest.raises(DomainError):
        eval_log_abs(SeriesGrowth(factorial_series(5)), 6)
    with pytest.raises(PreconditionError):
        eval_log_abs(GeometricGrowth(Fraction(1)), -1)


def test_sum_log_abs_examples():
    ones = GeometricGrowth(Fraction(0))
    total = sum_log_abs(ones, 8, inclusive=True)
    assert total.lo == 0
    assert total.hi >= 0 and total.encloses(5)

    superfactorial = superfactorial_growth()
    total = sum_log_abs(superfactorial, 10, inclusive=True)
    assert total.lo >= 120
    assert total.hi <= 123

    assert sum_log_abs(ones, 0, inclusive=False).is_neg_infinity


def test_sum_log_abs_unbounded_term():
    table = TableGrowth((LogMagInterval(0, 0), POS_INFINITY, LogMagInterval(1, 1)))
    assert sum_log_abs(table, 4, inclusive=True).is_pos_infinity


def test_sum_log_abs_parity():
    doubling = GeometricGrowth(Fraction(1))
    for n in range(1, 30):
        same = sum_log_abs(doubling, n, inclusive=True) == sum_log_abs(doubling, n, inclusive=False)
        assert same == (n % 2 == 1)


def test_margin_superfactorial_example():
    value = margin(MarginKind.C1, superfactorial_growth(), FactorialRho(), 10, 0, 1)
    bound = log2_interval(math.factorial(10)).hi + 123 - math.factorial(10)
    assert value.hi <= bound
    assert value.is_negative()


def test_margin_geometric_against_factorial_rho_grows():
    geometric = GeometricGrowth(Fraction(1))
    values = [margin(MarginKind.C1, geometric, FactorialRho(), n, 0, 1) for n in range(20, 41)]
    assert all(v.is_nonnegative() for v in values)
    assert values[-1].lo > values[0].hi


def test_margin_padic_example():
    value = margin(MarginKind.NA1, padic_superfactorial_growth(), OneRho(), 10, 1, 2)
    assert value.hi <= 2 * 120 - math.factorial(9)
    assert value.is_negative()


def test_margin_preconditions():
    with pytest.raises(PreconditionError):
        margin(MarginKind.C1, superfactorial_growth(), FactorialRho(), 4, 1, 1)
    archimedean = SeriesGrowth(factorial_series(20))
    with pytest.raises(UsageError):
        margin(MarginKind.NA1, archimedean, OneRho(), 10, 0, 1)


def test_margin_vanishing_right_side():
    X = Series([1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1], 10)
    value = margin(MarginKind.C1, SeriesGrowth(X), OneRho(), 8, 0, 1)
    assert value.is_pos_infinity


def test_margin_interval_soundness():
    """The exact ratio rho(n) (sum |X_l|)^m / |X_(n-lambda)| lies inside the margin"""
    rng = random.Random(41)
    for _ in range(20):
        X = Series([rng.randint(1, 10 ** 6) * rng.choice([1, -1]) for _ in range(21)], 20)
        spec = SeriesGrowth(X)
        for n in range(3, 21):
            for m in range(3):
                exact = sum((abs(X[l]) for l in range(n // 2 + 1)), Fraction(0)) ** m / abs(X[n])
                assert margin(MarginKind.C1, spec, OneRho(), n, 0, m).encloses(exact)


def test_superfactorial_criteria_all_satisfied():
    report = check_criteria(superfactorial_growth(), FactorialRho(), 3, 5, (20, 60))
    assert report.precondition_x0 is True
    assert all(v is Verdict.SATISFIED_EMPIRICALLY for v in report.verdicts.values())
    assert report.all_satisfied
    assert len(report.verdicts) == 4 * 6
    for entry in report.entries:
        uppers = [mg.hi for _, mg in entry.margins]
        assert all(u < 0 for u in uppers)
        assert all(b < a for a, b in zip(uppers, uppers[1:]))


def test_padic_superfactorial_criteria():
    report = check_criteria(padic_superfactorial_growth(), OneRho(), 3, 5, (10, 60), mode="nonarchimedean")
    assert report.precondition_x0 is True
    for entry in report.entries:
        if entry.kind in (MarginKind.NA1, MarginKind.NA2):
            uppers = [mg.hi for _, mg in entry.margins]
            assert all(u < 0 for u in uppers)
            assert all(b < a for a, b in zip(uppers, uppers[1:]))
    assert report.all_satisfied


def test_geometric_negative_control():
    report = check_criteria(GeometricGrowth(Fraction(1)), FactorialRho(), 3, 5, (20, 60))
    assert all(v is Verdict.VIOLATED for v in report.verdicts.values())
    assert not report.all_satisfied


def test_criteria_preconditions():
    with pytest.raises(PreconditionError):
        check_criteria(superfactorial_growth(), FactorialRho(), 3, 5, (8, 20))
    short = TableGrowth(tuple(LogMagInterval(n, n) for n in range(15)))
    with pytest.raises(DomainError):
        check_criteria(short, OneRho(), 0, 1, (5, 20))
    with pytest.raises(UsageError):
        check_criteria(superfactorial_growth(), FactorialRho(), 0, 1, (5, 20), mode="complex")
    with pytest.raises(PreconditionError):
        check_criteria(superfactorial_growth(), FactorialRho(), -1, 5, (20, 60))
    with pytest.raises(PreconditionError):
        check_criteria(superfactorial_growth(), FactorialRho(), 3, -1, (20, 60))


def test_all_satisfied_needs_verdicts():
    report = check_criteria(superfactorial_growth(), FactorialRho(), 3, 5, (20, 60))
    assert report.all_satisfied
    report.verdicts.clear()
    assert not report.all_satisfied


def test_precondition_x0_states():
    small = TableGrowth(tuple([LogMagInterval(-3, -2)] + [LogMagInterval(n, n) for n in range(1, 12)]))
    assert check_criteria(small, OneRho(), 0, 0, (4, 10)).precondition_x0 is False
    straddle = TableGrowth(tuple([LogMagInterval(-1, 1)] + [LogMagInterval(n, n) for n in range(1, 12)]))
    assert check_criteria(straddle, OneRho(), 0, 0, (4, 10)).precondition_x0 is None


def test_judge_rules():
    falling = [LogMagInterval(-n, -n) for n in range(1, 9)]
    assert judge(falling) is Verdict.SATISFIED_EMPIRICALLY
    rising_tail = [LogMagInterval(-9 + n, -9 + n) for n in range(8)]
    assert judge(rising_tail) is Verdict.INCONCLUSIVE
    assert judge([LogMagInterval(-1, -1), LogMagInterval(0, 1)]) is Verdict.VIOLATED
    assert judge([LogMagInterval(-1, 2), LogMagInterval(-1, 2)]) is Verdict.INCONCLUSIVE


def test_rho_validation():
    with pytest.raises(DomainError):
        GeometricRho(Fraction(1, 2))
    with pytest.raises(DomainError):
        PolynomialRho(-1)
    decreasing = TableRho((LogMagInterval(5, 5), LogMagInterval(1, 1)))
    with pytest.raises(DomainError):
        decreasing.validate(0, 1)
    assert PolynomialRho(2).log_value(3) == LogMagInterval(4, 4)


def test_prop1_examples():
    order = 20
    report = check_prop1_bound(Series.one(order), Series([Fraction(3, 2)], order), Fraction(2), Fraction(3))
    assert report.status == "PASS"
    geometric = check_prop1_bound(Series([1, -1], order), Series.one(order), Fraction(2), Fraction(2))
    assert geometric.passed
    assert geometric.quotient == Series([1] * (order + 1), order)


def test_prop1_scaled_alternating():
    order = 200
    C = Series([(-1) ** n for n in range(order + 1)], order)
    D = Series([1] * (order + 1), order)
    report = check_prop1_bound(C, D, Fraction(2), Fraction(2), Fraction(2))
    assert report.passed
    assert report.order == order


def test_prop1_premise_failure():
    report = check_prop1_bound(Series([1, 5], 1), Series([1, 0], 1), Fraction(2), Fraction(2))
    assert report.status == "PREMISE_FAIL"
    assert report.premise_violations["C"] == [1]
    assert not report.passed
    with pytest.raises(PreconditionError):
        check_prop1_bound(Series([2, 1], 1), Series([1, 0], 1), Fraction(3), Fraction(3))


def _random_premise_pair(rng, order, c, d, r):
    """C, D with C_0 = 1, |C_n| < c r^n and |D_n| < d r^n"""
    C, D = [Fraction(1)], []
    scale = Fraction(1)
    for n in range(order + 1):
        if n:
            C.append(c * scale * Fraction(rng.randint(-3, 3), 4))
        D.append(d * scale * Fraction(rng.randint(-3, 3), 4))
        scale *= r
    return Series(C, order), Series(D, order)


def test_prop1_random_premises():
    rng = random.Random(53)
    for i in range(50):
        c = Fraction(rng.randint(3, 12), 2)
        d = Fraction(rng.randint(1, 12), 2)
        r = [Fraction(1, 2), Fraction(1), Fraction(2)][i % 3]
        C, D = _random_premise_pair(rng, 200, c, d, r)
        report = check_prop1_bound(C, D, c, d, r)
        assert report.status == "PASS", report.first_violation


def test_prop1_padic():
    order = 30
    C = Series([1] + [2] * order, order)
    D = Series([4] * (order + 1), order)
    report = check_prop1_bound(C, D, Fraction(2), Fraction(1, 2), Fraction(1), AbsValue.padic(2))
    assert report.passed
    assert report.abs_label == "padic:2"
    X = divide(D, C)
    assert all(AbsValue.padic(2)(X[n]) <= Fraction(1, 2) * 3 ** n for n in range(order + 1))


def test_classify_growth():
    geometric = classify_growth(GeometricGrowth(Fraction(1)), 100)
    assert geometric.label == "exponential"
    assert abs(geometric.estimate - 1) <= Fraction(1, 2)
    assert classify_growth(SeriesGrowth(factorial_series(100)), 100).label == "superexponential"
    constant = classify_growth(GeometricGrowth(Fraction(0)), 100)
    assert constant.label == "exponential"
    assert constant.estimate == 0
    assert constant.heuristic
    with pytest.raises(PreconditionError):
        classify_growth(GeometricGrowth(Fraction(1)), 15)


def test_classify_skips_zero_coefficients():
    zeros = SeriesGrowth(Series.zero(40))
    assert classify_growth(zeros, 40).label == "inconclusive"


def test_irrationality_witness_small_bounds():
    X = factorial_series(200)
    for c in range(1, 11):
        for d in range(1, 11):
            for r in (1, 2, 4):
                n = irrationality_witness(X, Fraction(c), Fraction(d), Fraction(r), 200)
                assert n is not None
                assert math.factorial(n) > d * (1 + c) ** n * r ** n
                if (1 + c) * r <= 6:
                    assert n <= 50


def test_irrationality_witness_none_for_geometric():
    assert irrationality_witness(GeometricGrowth(Fraction(1)), Fraction(1), Fraction(1), Fraction(1), 100) is None


def test_decomposition_margins():
    X = Series([2, 3, 5, 7, 11, 13, 17, 19, 23], 8)
    A = SeriesPoly([Series([1], 8), Series([0, 1], 8), Series.one(8)])
    margins = decomposition_margins(A, X, 8, 2)
    assert set(margins) == {"gamma", "delta", "epsilon"}
    parts = decompose(A, X, 8, 2)
    for name, value in margins.items():
        assert value.encloses(abs(getattr(parts, name)) / abs(X[6]))


if __name__ == "__main__":
    pytest.main([__file__])
