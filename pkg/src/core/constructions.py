"""
Example series generators and the gap-series checks.

L(z) = sum_k z^(2^k) is stored sparsely; its powers go through the support
convolution in core.series, which keeps orders around 2^14 cheap.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from core.errors import UsageError
from core.exactnum import AbsValue
from core.growth import FactorialExponentGrowth, GrowthSpec
from core.series import Series, SeriesPoly, eval_poly, power
from utils.config import config
from utils.logger import logger


def c_index(p: int, q: int) -> int:
    """c(p, q) = 2^q - 2^(q-p): p set bits at positions q-p..q-1"""
    if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
        raise UsageError("c(p, q) takes integers")
    if not 1 <= p < q:
        raise UsageError(f"c(p, q) needs 1 <= p < q, got p={p}, q={q}")
    return 2 ** q - 2 ** (q - p)


def liouville_series(order: int) -> Series:
    """L(z) through z^order; index 1 = 2^0 is set, index 0 is not"""
    if order < 1:
        raise UsageError(f"the gap series needs order >= 1, got {order}")
    terms = {}
    k = 1
    while k <= order:
        terms[k] = Fraction(1)
        k *= 2
    return Series.from_terms(terms, order)


def factorial_series(order: int) -> Series:
    """sum n! z^n"""
    if order < 0:
        raise UsageError(f"order must be nonnegative, got {order}")
    return Series([math.factorial(n) for n in range(order + 1)], order)


def _superfactorial_cap(order: int) -> None:
    cap = config.get('limits.superfactorial_max_order', 8)
    if not 0 <= order <= cap:
        raise UsageError(f"exact superfactorial series are limited to order <= {cap}, got {order}")


def superfactorial_growth() -> GrowthSpec:
    """|X_n| = 2^(n!)"""
    return FactorialExponentGrowth(a=Fraction(1))


def superfactorial_series(order: int) -> Series:
    """sum 2^(n!) z^n, exactly; for cross-checks against superfactorial_growth"""
    _superfactorial_cap(order)
    return Series([2 ** math.factorial(n) for n in range(order + 1)], order)


def padic_superfactorial_growth() -> GrowthSpec:
    """X_n = 2^(-n!) under |.|_2, so |X_n|_2 = 2^(n!)"""
    return FactorialExponentGrowth(a=Fraction(1), abs_value=AbsValue.padic(2))


def padic_superfactorial_series(order: int) -> Series:
    _superfactorial_cap(order)
    return Series([Fraction(1, 2 ** math.factorial(n)) for n in range(order + 1)], order)


@lru_cache(maxsize=64)
def liouville_power(j: int, order: int) -> Series:
    """L^j through z^order"""
    if j < 0:
        raise UsageError(f"powers of L take j >= 0, got {j}")
    return power(liouville_series(order), j)


def count_power_of_two_sums(n: int, parts: int, max_exponent: int) -> int:
    """Ordered tuples (e_1..e_parts), e_i < max_exponent, with sum 2^e_i = n"""
    return sum(
        1
        for exponents in itertools.product(range(max_exponent), repeat=parts)
        if sum(2 ** e for e in exponents) == n
    )


def support_nesting(p: int, order: int) -> List[int]:
    """Indices in supp(L^(p-1)) that are missing from supp(L^p)"""
    if p < 1:
        raise UsageError(f"support nesting needs p >= 1, got {p}")
    lower = set(liouville_power(p - 1, order).support)
    upper = set(liouville_power(p, order).support)
    return sorted(lower - upper)


def _check_gap_limits(p: int, q: int) -> None:
    limits = config.get_gap_limits()
    max_q, max_p = limits.get('max_q', 14), limits.get('max_p', 4)
    if q > max_q or p > max_p:
        raise UsageError(f"gap-series checks are limited to q <= {max_q}, p <= {max_p}; got p={p}, q={q}")


@dataclass
class GapClaimReport:
    p: int
    q: int
    c_index: int
    d_max: int
    order: int
    coeff_at_c: Dict[int, Fraction]
    expected_value: int
    claimed_value: int
    oracle_count: int
    lower_powers_vanish: bool
    zero_window_radius_verified: int
    claimed_radius: int
    paper_radius_holds: bool
    counterexamples: List[Tuple[int, int, Fraction]] = field(default_factory=list)
    counterexample_total: int = 0
    support_nesting_exceptions: List[int] = field(default_factory=list)

    @property
    def observed_value(self) -> Fraction:
        return self.coeff_at_c[self.p]

    @property
    def value_matches_oracle(self) -> bool:
        return self.observed_value == self.oracle_count

    @property
    def passed(self) -> bool:
        """What the binary-representation argument guarantees; the claimed radius is reported separately"""
        return (
            self.value_matches_oracle
            and self.observed_value == self.expected_value
            and self.lower_powers_vanish
            and self.zero_window_radius_verified >= 2 ** (self.q - self.p - 1)
        )


def _zero_window(powers: Dict[int, Series], c: int, order: int) -> int:
    """Largest w with (L^j)_n = 0 for every j and 0 < |c - n| < w, within the computed range"""
    reach = min(c, order - c)
    for distance in range(1, reach + 1):
        for series in powers.values():
            if series[c - distance] != 0 or series[c + distance] != 0:
                return distance
    return reach + 1


def verify_gap_claims(p: int, q: int, d_max: int = 0) -> GapClaimReport:
    """Check the coefficient and zero-window claims for L at c(p, q)"""
    c = c_index(p, q)
    _check_gap_limits(p, q)
    if d_max < 0:
        raise UsageError(f"degree bound must be nonnegative, got {d_max}")

    claimed_radius = 2 ** (q - p)
    order = c + max(d_max, claimed_radius)
    logger.debug(f"gap claims p={p} q={q}: c={c}, order {order}")
    powers = {j: liouville_power(j, order) for j in range(1, p + 1)}
    coeff_at_c = {j: powers[j][c] for j in powers}

    radius = _zero_window(powers, c, order)
    cap = config.get_gap_limits().get('max_counterexamples', 25)
    counterexamples: List[Tuple[int, int, Fraction]] = []
    total = 0
    for n in range(c - claimed_radius + 1, c + claimed_radius):
        if n == c:
            continue
        for j, series in powers.items():
            value = series[n]
            if value != 0:
                total += 1
                if len(counterexamples) < cap:
                    counterexamples.append((j, n, value))

    return GapClaimReport(
        p=p,
        q=q,
        c_index=c,
        d_max=d_max,
        order=order,
        coeff_at_c=coeff_at_c,
        expected_value=math.factorial(p),
        claimed_value=math.factorial(q),
        oracle_count=count_power_of_two_sums(c, p, q),
        lower_powers_vanish=all(coeff_at_c[j] == 0 for j in range(1, p)),
        zero_window_radius_verified=radius,
        claimed_radius=claimed_radius,
        paper_radius_holds=radius >= claimed_radius,
        counterexamples=counterexamples,
        counterexample_total=total,
        support_nesting_exceptions=support_nesting(p, order),
    )


@dataclass
class PunchlineReport:
    p: int
    q: int
    c_index: int
    n: int
    d: int
    required_radius: int
    verified_radius: int
    status: str
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    required_q: Optional[int] = None

    @property
    def equal(self) -> bool:
        return self.lhs is not None and self.lhs == self.rhs

    @property
    def nonzero(self) -> bool:
        return self.rhs is not None and self.rhs != 0


def verify_gap_punchline(A: SeriesPoly, p: int, q: int) -> PunchlineReport:
    """(A(L))_(c+n) = (L^p)_c (A_p)_n for n the valuation of the leading coefficient"""
    if A.degree != p:
        raise UsageError(f"the polynomial must have degree p = {p}, got {A.degree}")
    lead = A[p]
    if lead.is_zero:
        raise UsageError("the leading coefficient is the zero series; no index n exists")
    n = lead.valuation
    d = A.z_degree
    c = c_index(p, q)
    _check_gap_limits(p, q)

    needed = d + n + 1
    claims = verify_gap_claims(p, q, d_max=d + n)
    report = PunchlineReport(
        p=p,
        q=q,
        c_index=c,
        n=n,
        d=d,
        required_radius=needed,
        verified_radius=claims.zero_window_radius_verified,
        status="INCONCLUSIVE",
    )
    if claims.zero_window_radius_verified < needed:
        # the verified window is 2^(q-p-1)
        report.required_q = p + 1 + (d + n).bit_length()
        return report

    order = c + n
    L = liouville_series(order)
    report.lhs = eval_poly(A.padded(order), L)[c + n]
    report.rhs = claims.coeff_at_c[p] * lead[n]
    report.status = "PASS" if report.equal and report.nonzero else "FAIL"
    return report
