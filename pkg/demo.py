#!/usr/bin/env python3
"""
Demo script for fps-transcend - walks through the main checks without input files
"""

import sys
from fractions import Fraction
from pathlib import Path

# Add src directory to Python path
src_path = Path(__file__).parent / "src"
sys.path.insert(0, str(src_path))

from core.constructions import (
    c_index,
    factorial_series,
    superfactorial_growth,
    verify_gap_claims,
    verify_gap_punchline,
)
from core.decomp import decompose
from core.growth import (
    FactorialRho,
    SeriesGrowth,
    check_criteria,
    classify_growth,
    irrationality_witness,
)
from core.series import Series, SeriesPoly
from utils.logger import logger


def demo_decomposition():
    """The four-part split of A(X)_n on a small example"""
    print("\nDecomposition of A(X)_n")
    print("=" * 30)

    X = Series([2, 3, 5, 7, 11, 13, 17, 19, 23], 8)
    A = SeriesPoly([Series([3], 8), Series([0, 1], 8), Series([1, 1], 8)])
    for n, lam in [(4, 0), (6, 1), (8, 3)]:
        parts = decompose(A, X, n, lam)
        print(f"n={n} lambda={lam}: head={parts.head} gamma={parts.gamma} "
              f"delta={parts.delta} epsilon={parts.epsilon} -> {parts.alpha_n} ok={parts.identity_ok}")


def demo_gap_series():
    """Coefficient and window claims for L at c(p, q)"""
    print("\nGap series")
    print("=" * 30)

    for p, q in [(2, 3), (2, 4), (3, 6)]:
        report = verify_gap_claims(p, q)
        print(f"p={p} q={q} c={c_index(p, q)}: (L^p)_c={report.observed_value} "
              f"radius={report.zero_window_radius_verified} (claimed {report.claimed_radius})")

    A = SeriesPoly([Series([3], 2), Series([0, 1], 2), Series([1, 1], 2)])
    punchline = verify_gap_punchline(A, 2, 10)
    print(f"punchline at q=10: {punchline.lhs} = {punchline.rhs} -> {punchline.status}")


def demo_growth():
    """Criteria margins and the growth classifier"""
    print("\nGrowth")
    print("=" * 30)

    report = check_criteria(superfactorial_growth(), FactorialRho(), 3, 5, (20, 40))
    satisfied = sum(v.value == "SATISFIED_EMPIRICALLY" for v in report.verdicts.values())
    print(f"2^(n!) against rho = n!: {satisfied}/{len(report.verdicts)} (lambda, m) pairs satisfied")

    X = factorial_series(100)
    print(f"sum n! z^n classified as {classify_growth(SeriesGrowth(X), 100).label}")
    witness = irrationality_witness(X, Fraction(10), Fraction(10), Fraction(2))
    print(f"n! beats 10 * 11^n * 2^n first at n = {witness}")


def main():
    """Main demo function"""
    try:
        print("fps-transcend demo")
        print("=" * 50)
        demo_decomposition()
        demo_gap_series()
        demo_growth()
        print("\nDemo completed successfully!")
        print("For the command-line interface, use: python run.py --help")
    except Exception as e:
        print(f"Demo failed: {e}")
        logger.error(f"Demo error: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
