"""
Growth laws for |X_n|, ring bounds rho(n), and finite-range margins for the
transcendence criteria.

A margin is log2(left side) - log2(right side) of one of the o(.) conditions,
enclosed in a LogMagInterval. No finite computation proves an o(.) statement,
so verdicts are empirical: negative margins whose upper bounds stop growing
over the tested tail.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from core.decomp import decompose
from core.errors import DomainError, PreconditionError, UsageError
from core.exactnum import (
    NEG_INFINITY,
    AbsValue,
    LogMagInterval,
    interval_max,
    log2_interval,
)
from core.series import Series, SeriesPoly, divide
from utils.config import config
from utils.helpers import below_half, half_floor
from utils.logger import logger


class GrowthSpec(ABC):
    """Declarative n -> log2|X_n|"""

    abs_value: AbsValue

    @property
    def domain_max(self) -> Optional[int]:
        """Largest admissible n, None when unbounded"""
        return None

    @abstractmethod
    def _log_abs(self, n: int) -> LogMagInterval:
        ...


@dataclass(frozen=True)
class TableGrowth(GrowthSpec):
    intervals: Tuple[LogMagInterval, ...]
    abs_value: AbsValue = field(default_factory=AbsValue.archimedean)

    @property
    def domain_max(self) -> Optional[int]:
        return len(self.intervals) - 1

    def _log_abs(self, n: int) -> LogMagInterval:
        return self.intervals[n]


@dataclass(frozen=True)
class FactorialExponentGrowth(GrowthSpec):
    """log2|X_n| = a n! + b n + c, exactly"""

    a: Fraction
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    abs_value: AbsValue = field(default_factory=AbsValue.archimedean)

    def _log_abs(self, n: int) -> LogMagInterval:
        return LogMagInterval.exact(self.a * math.factorial(n) + self.b * n + self.c)


@dataclass(frozen=True)
class GeometricGrowth(GrowthSpec):
    """log2|X_n| = n log2 r, exactly"""

    log2r: Fraction
    abs_value: AbsValue = field(default_factory=AbsValue.archimedean)

    def _log_abs(self, n: int) -> LogMagInterval:
        return LogMagInterval.exact(n * self.log2r)


@dataclass(frozen=True)
class SeriesGrowth(GrowthSpec):
    """Magnitudes read off the exact coefficients of a concrete series"""

    series: Series
    abs_value: AbsValue = field(default_factory=AbsValue.archimedean)

    @property
    def domain_max(self) -> Optional[int]:
        return self.series.order

    def magnitude(self, n: int) -> Fraction:
        return self.abs_value.evaluate(self.series[n])

    def _log_abs(self, n: int) -> LogMagInterval:
        return log2_interval(self.magnitude(n))


def eval_log_abs(spec: GrowthSpec, n: int) -> LogMagInterval:
    """Rigorous enclosure of log2|X_n|"""
    if n < 0:
        raise PreconditionError(f"growth laws are indexed by n >= 0, got {n}")
    if spec.domain_max is not None and n > spec.domain_max:
        raise DomainError(f"n = {n} is outside the growth law's domain 0..{spec.domain_max}")
    return spec._log_abs(n)


def sum_log_abs(spec: GrowthSpec, n: int, inclusive: bool) -> LogMagInterval:
    """Enclosure of log2 sum |X_l| over l <= n/2 (inclusive) or l < n/2 (strict)"""
    last = half_floor(n) if inclusive else below_half(n)
    if last < 0:
        return NEG_INFINITY
    terms = [eval_log_abs(spec, l) for l in range(last + 1)]
    nonzero = [t for t in terms if not t.is_neg_infinity]
    if not nonzero:
        return NEG_INFINITY
    biggest = interval_max(nonzero)
    if not biggest.is_finite:
        return biggest
    return LogMagInterval(biggest.lo, biggest.hi + log2_interval(len(nonzero)).hi)


class RhoSpec(ABC):
    """Monotone positive bound rho(n) on the coefficients of a ring of series"""

    @abstractmethod
    def log_value(self, n: int) -> LogMagInterval:
        ...

    def validate(self, start: int, stop: int) -> None:
        """Check positivity and monotonicity on start..stop"""
        previous = None
        for n in range(start, stop + 1):
            current = self.log_value(n)
            if current.is_neg_infinity:
                raise DomainError(f"rho({n}) = 0; rho must be strictly positive")
            if previous is not None and current.hi < previous.lo:
                raise DomainError(f"rho decreases at n = {n}; rho must be monotone increasing")
            previous = current


@dataclass(frozen=True)
class FactorialRho(RhoSpec):
    def log_value(self, n: int) -> LogMagInterval:
        return log2_interval(math.factorial(n))


@dataclass(frozen=True)
class GeometricRho(RhoSpec):
    """rho(n) = r^n with r >= 1"""

    r: Fraction

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError(f"geometric rho needs r >= 1 to be monotone increasing, got {self.r}")

    def log_value(self, n: int) -> LogMagInterval:
        return log2_interval(self.r ** n)


@dataclass(frozen=True)
class PolynomialRho(RhoSpec):
    """rho(n) = (n + 1)^degree"""

    degree: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DomainError(f"polynomial rho needs degree >= 0, got {self.degree}")

    def log_value(self, n: int) -> LogMagInterval:
        return log2_interval((n + 1) ** self.degree)


@dataclass(frozen=True)
class TableRho(RhoSpec):
    intervals: Tuple[LogMagInterval, ...]

    def log_value(self, n: int) -> LogMagInterval:
        if n >= len(self.intervals):
            raise DomainError(f"rho table has no entry for n = {n}")
        return self.intervals[n]


@dataclass(frozen=True)
class OneRho(RhoSpec):
    def log_value(self, n: int) -> LogMagInterval:
        return LogMagInterval.exact(0)


class MarginKind(str, Enum):
    C1 = "C1"
    C2 = "C2"
    COMBINED = "COMBINED"
    NA1 = "NA1"
    NA2 = "NA2"
    NA_COMBINED = "NA_COMBINED"

    @property
    def nonarchimedean(self) -> bool:
        return self.name.startswith("NA")


class Verdict(str, Enum):
    SATISFIED_EMPIRICALLY = "SATISFIED_EMPIRICALLY"
    INCONCLUSIVE = "INCONCLUSIVE"
    VIOLATED = "VIOLATED"


MODE_KINDS = {
    "archimedean": (MarginKind.C1, MarginKind.C2, MarginKind.COMBINED),
    "nonarchimedean": (MarginKind.NA1, MarginKind.NA2, MarginKind.NA_COMBINED),
}


def margin(kind: MarginKind, spec: GrowthSpec, rho: RhoSpec, n: int, lam: int, m: int) -> LogMagInterval:
    """log2(LHS) - log2(RHS) for one criterion at one (n, lambda, m)"""
    kind = MarginKind(kind)
    if lam < 0 or m < 0:
        raise PreconditionError(f"lambda and m must be nonnegative, got lambda={lam}, m={m}")
    if n <= 2 * lam + 2:
        raise PreconditionError(f"margins need n > 2 lambda + 2, got n={n}, lambda={lam}")
    if kind.nonarchimedean and isinstance(spec, SeriesGrowth) and not spec.abs_value.is_nonarchimedean:
        raise UsageError(f"{kind.value} needs a nonarchimedean absolute value on the series")

    def x(i: int) -> LogMagInterval:
        return eval_log_abs(spec, i)

    lhs = rho.log_value(n)
    if kind in (MarginKind.C2, MarginKind.COMBINED, MarginKind.NA2, MarginKind.NA_COMBINED):
        lhs = lhs + x(n - lam - 1)

    if kind in (MarginKind.C1, MarginKind.COMBINED):
        lhs = lhs + sum_log_abs(spec, n, inclusive=True).scale(m)
    elif kind is MarginKind.C2:
        lhs = lhs + sum_log_abs(spec, n, inclusive=False).scale(m)
    elif kind in (MarginKind.NA1, MarginKind.NA_COMBINED):
        lhs = lhs + x(half_floor(n)).scale(m)
    else:
        lhs = lhs + x(half_floor(n - 1)).scale(m)

    return lhs - x(n - lam)


def _upper_nonincreasing(margins: Sequence[LogMagInterval]) -> bool:
    for previous, current in zip(margins, margins[1:]):
        if current.is_neg_infinity:
            continue
        if previous.is_neg_infinity or current.is_pos_infinity or previous.is_pos_infinity:
            return False
        if current.hi > previous.hi:
            return False
    return True


def judge(margins: Sequence[LogMagInterval]) -> Verdict:
    """Empirical verdict for one margin sequence ordered by n"""
    if not margins or any(mg.is_pos_infinity for mg in margins):
        return Verdict.VIOLATED
    tail = list(margins[len(margins) // 2:])
    if all(mg.is_negative() for mg in margins) and _upper_nonincreasing(tail):
        return Verdict.SATISFIED_EMPIRICALLY
    if margins[-1].is_nonnegative():
        return Verdict.VIOLATED
    return Verdict.INCONCLUSIVE


@dataclass
class CriteriaEntry:
    kind: MarginKind
    lam: int
    m: int
    margins: List[Tuple[int, LogMagInterval]]
    verdict: Verdict


@dataclass
class CriteriaReport:
    mode: str
    n_range: Tuple[int, int]
    lambda_max: int
    m_max: int
    x0_log: LogMagInterval
    precondition_x0: Optional[bool]
    entries: List[CriteriaEntry] = field(default_factory=list)
    verdicts: Dict[Tuple[int, int], Verdict] = field(default_factory=dict)

    @property
    def all_satisfied(self) -> bool:
        return self.precondition_x0 is True and bool(self.verdicts) and all(
            v is Verdict.SATISFIED_EMPIRICALLY for v in self.verdicts.values()
        )


def _combine(pair: Tuple[Verdict, Verdict], single: Verdict) -> Verdict:
    """The theorem needs both displayed conditions, its corollary the single one"""
    satisfied = Verdict.SATISFIED_EMPIRICALLY
    if single is satisfied or all(v is satisfied for v in pair):
        return satisfied
    if single is Verdict.VIOLATED and Verdict.VIOLATED in pair:
        return Verdict.VIOLATED
    return Verdict.INCONCLUSIVE


def check_x0(spec: GrowthSpec) -> Tuple[LogMagInterval, Optional[bool]]:
    """|X_0| >= 1 as True/False, or None when the enclosure straddles 0"""
    x0 = eval_log_abs(spec, 0)
    if x0.is_nonnegative():
        return x0, True
    if x0.is_negative():
        return x0, False
    return x0, None


def check_criteria(
    spec: GrowthSpec,
    rho: RhoSpec,
    lambda_max: int,
    m_max: int,
    n_range: Tuple[int, int],
    mode: str = "archimedean",
) -> CriteriaReport:
    """Evaluate every margin of the mode over lambda <= lambda_max, m <= m_max, n in n_range"""
    if mode not in MODE_KINDS:
        raise UsageError(f"mode must be one of {sorted(MODE_KINDS)}, got {mode!r}")
    start, stop = n_range
    if start > stop:
        raise UsageError(f"empty n range {start}:{stop}")
    if lambda_max < 0 or m_max < 0:
        raise PreconditionError(f"lambda_max and m_max must be nonnegative, got {lambda_max}, {m_max}")
    if start <= 2 * lambda_max + 2:
        raise PreconditionError(
            f"n range must start above 2 lambda_max + 2 = {2 * lambda_max + 2}, got {start}"
        )
    rho.validate(start, stop)
    x0, precondition = check_x0(spec)

    report = CriteriaReport(
        mode=mode,
        n_range=(start, stop),
        lambda_max=lambda_max,
        m_max=m_max,
        x0_log=x0,
        precondition_x0=precondition,
    )
    kinds = MODE_KINDS[mode]
    logger.debug(
        f"criteria: {len(kinds)} kinds x {lambda_max + 1} lambdas x {m_max + 1} powers "
        f"x {stop - start + 1} indices"
    )
    for lam in range(lambda_max + 1):
        for m in range(m_max + 1):
            per_kind: Dict[MarginKind, Verdict] = {}
            for kind in kinds:
                margins = [(n, margin(kind, spec, rho, n, lam, m)) for n in range(start, stop + 1)]
                verdict = judge([mg for _, mg in margins])
                per_kind[kind] = verdict
                report.entries.append(CriteriaEntry(kind, lam, m, margins, verdict))
            report.verdicts[(lam, m)] = _combine((per_kind[kinds[0]], per_kind[kinds[1]]), per_kind[kinds[2]])
    return report


@dataclass
class Prop1Report:
    status: str
    order: int
    c: Fraction
    d: Fraction
    r: Fraction
    abs_label: str
    premise_violations: Dict[str, List[int]] = field(default_factory=dict)
    first_violation: Optional[int] = None
    quotient: Optional[Series] = None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def check_prop1_bound(
    C: Series,
    D: Series,
    c: Fraction,
    d: Fraction,
    r: Fraction = Fraction(1),
    abs_value: Optional[AbsValue] = None,
) -> Prop1Report:
    """Verify |X_n| <= d (1+c)^n r^n for X = D / C under the strict premises
    |C_n| < c r^n and |D_n| < d r^n."""
    abs_value = abs_value or AbsValue.archimedean()
    c, d, r = Fraction(c), Fraction(d), Fraction(r)
    if c <= 0 or d <= 0 or r <= 0:
        raise PreconditionError("c, d and r must be positive")
    order = min(C.order, D.order)
    C, D = C.truncate(order), D.truncate(order)
    if C[0] != 1:
        raise PreconditionError(f"the bound is stated for C_0 = 1, got C_0 = {C[0]}")

    report = Prop1Report(status="PASS", order=order, c=c, d=d, r=r, abs_label=abs_value.label)
    scale = Fraction(1)
    bad_c, bad_d = [], []
    for n in range(order + 1):
        if not abs_value.evaluate(C[n]) < c * scale:
            bad_c.append(n)
        if not abs_value.evaluate(D[n]) < d * scale:
            bad_d.append(n)
        scale *= r
    if bad_c or bad_d:
        report.status = "PREMISE_FAIL"
        report.premise_violations = {"C": bad_c, "D": bad_d}
        return report

    X = divide(D, C)
    report.quotient = X
    bound = d
    step = (1 + c) * r
    for n in range(order + 1):
        if abs_value.evaluate(X[n]) > bound:
            report.status = "FAIL"
            report.first_violation = n
            logger.error(f"Proposition bound violated at n = {n}: this is an implementation bug")
            break
        bound *= step
    return report


@dataclass
class GrowthClass:
    label: str
    estimate: Optional[Fraction]
    window: Tuple[int, int]
    tau: Fraction
    heuristic: bool = True


def classify_growth(spec: GrowthSpec, n_max: int, tau: Optional[Fraction] = None) -> GrowthClass:
    """Heuristic exponential / superexponential call from u_n = log2|X_n| / n"""
    settings = config.get_classify_settings()
    if tau is None:
        tau = Fraction(settings.get('tau', '1/2'))
    minimum = settings.get('min_n_max', 16)
    if n_max < minimum:
        raise PreconditionError(f"classification needs n_max >= {minimum}, got {n_max}")

    window = (n_max // 2, n_max)
    ratios: List[Fraction] = []
    for n in range(window[0], window[1] + 1):
        value = eval_log_abs(spec, n)
        if value.is_neg_infinity:
            continue
        ratios.append(value.hi / n)

    if not ratios:
        return GrowthClass("inconclusive", None, window, tau)
    if max(ratios) - min(ratios) <= tau:
        return GrowthClass("exponential", sum(ratios, Fraction(0)) / len(ratios), window, tau)
    monotone = all(b >= a for a, b in zip(ratios, ratios[1:]))
    if monotone and ratios[-1] - ratios[0] > tau:
        return GrowthClass("superexponential", None, window, tau)
    return GrowthClass("inconclusive", None, window, tau)


def irrationality_witness(
    spec: Union[GrowthSpec, Series],
    c: Fraction,
    d: Fraction,
    r: Fraction,
    n_max: Optional[int] = None,
) -> Optional[int]:
    """First n with |X_n| > d (1+c)^n r^n, the bound any X = D / C with
    exponentially bounded C, D must obey; None if no such n up to n_max."""
    if isinstance(spec, Series):
        spec = SeriesGrowth(spec)
    if n_max is None:
        n_max = config.get('limits.witness_max_n', 400)
    if spec.domain_max is not None:
        n_max = min(n_max, spec.domain_max)
    c, d, r = Fraction(c), Fraction(d), Fraction(r)
    bound = d
    step = (1 + c) * r
    for n in range(n_max + 1):
        if isinstance(spec, SeriesGrowth):
            exceeded = spec.magnitude(n) > bound
        else:
            exceeded = eval_log_abs(spec, n).lo > log2_interval(bound).hi
        if exceeded:
            return n
        bound *= step
    return None


def decomposition_margins(
    A: SeriesPoly,
    X: Series,
    n: int,
    lam: int,
    abs_value: Optional[AbsValue] = None,
) -> Dict[str, LogMagInterval]:
    """log2|gamma|, log2|delta|, log2|epsilon| minus log2|X_(n-lambda)| for a concrete pair"""
    abs_value = abs_value or AbsValue.archimedean()
    components = decompose(A, X, n, lam)
    reference = log2_interval(abs_value.evaluate(X[n - lam]))
    return {
        "gamma": log2_interval(abs_value.evaluate(components.gamma)) - reference,
        "delta": log2_interval(abs_value.evaluate(components.delta)) - reference,
        "epsilon": log2_interval(abs_value.evaluate(components.epsilon)) - reference,
    }
