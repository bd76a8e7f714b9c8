"""
Core/tail decomposition of powers and the four-part decomposition of A(X)_n.

Index conventions: "k <= n/2" is read as k <= floor(n/2) and "l < n/2" as
l <= ceil(n/2) - 1; see utils.helpers.half_floor / below_half.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from core.errors import InvariantViolation, PreconditionError, UsageError
from core.exactnum import ExactScalar
from core.series import (
    Series,
    SeriesPoly,
    derivative_poly,
    eval_poly,
    integer_form,
    power,
    require_index,
)
from utils.config import config
from utils.helpers import below_half, half_floor
from utils.logger import logger

REGIONS = ("core", "epsilon", "gamma", "head")


@lru_cache(maxsize=256)
def _core_table(X: Series) -> List[Tuple[Series, ...]]:
    return [()]


def core_powers(X: Series, m_max: int) -> Tuple[Series, ...]:
    """X^[0], ..., X^[m_max], sliced from the widest table computed for X"""
    if m_max < 0:
        raise UsageError(f"m_max must be nonnegative, got {m_max}")
    cell = _core_table(X)
    if len(cell[0]) <= m_max:
        # grow geometrically
        cell[0] = _compute_core_powers(X, max(m_max, 2 * (len(cell[0]) - 1)))
    return cell[0][: m_max + 1]


def _compute_core_powers(X: Series, m_max: int) -> Tuple[Series, ...]:
    """X^[0], ..., X^[m_max] in one pass.

    For each n the parts are bounded by floor(n/2), so the dynamic program
    over (parts used, partial sum) is rerun per n. It works on integer
    numerators over the common denominator of X.
    """
    order = X.order
    numerators, denominator = integer_form(X.coeffs)
    rows = [[0] * (order + 1) for _ in range(m_max + 1)]

    for n in range(order + 1):
        bound = half_floor(n)
        ways = [1] + [0] * n
        rows[0][n] = ways[n]
        for parts in range(1, m_max + 1):
            extended = [0] * (n + 1)
            for s in range(n + 1):
                total = 0
                for k in range(min(bound, s) + 1):
                    if numerators[k] and ways[s - k]:
                        total += numerators[k] * ways[s - k]
                extended[s] = total
            ways = extended
            rows[parts][n] = ways[n]

    logger.debug(f"core_powers: order {order}, m_max {m_max}")
    return tuple(
        Series([Fraction(v, denominator ** m) for v in rows[m]], order)
        for m in range(m_max + 1)
    )


def core_power(X: Series, m: int) -> Series:
    """X^[m]: tuples k_1 + ... + k_m = n with every k_i <= n/2"""
    return core_powers(X, m)[m]


@lru_cache(maxsize=256)
def tail_power(X: Series, m: int) -> Series:
    """X^<m>: (X^<m>)_n = sum over l < n/2 of (X^(m-1))_l X_(n-l)"""
    if m < 1:
        raise UsageError(f"the tail power needs m >= 1, got {m}")
    lower = power(X, m - 1)
    out = []
    for n in range(X.order + 1):
        out.append(sum((lower[l] * X[n - l] for l in range(below_half(n) + 1)), Fraction(0)))
    return Series(out, X.order)


@lru_cache(maxsize=256)
def _aligned(A: SeriesPoly, X: Series) -> Tuple[SeriesPoly, Series]:
    order = min(A.order, X.order)
    return A.truncate(order), X.truncate(order)


@lru_cache(maxsize=256)
def derivative_at(A: SeriesPoly, X: Series) -> Series:
    """A'(X) at the common order"""
    A, X = _aligned(A, X)
    return eval_poly(derivative_poly(A), X)


def _check_n(A: SeriesPoly, X: Series, n: int) -> Tuple[SeriesPoly, Series]:
    A, X = _aligned(A, X)
    require_index(X, n)
    return A, X


def _check_lambda(n: int, lam: int) -> None:
    if isinstance(lam, bool) or not isinstance(lam, int) or lam < 0 or 2 * lam >= n:
        raise PreconditionError(f"lambda must satisfy 0 <= lambda < n/2, got lambda={lam}, n={n}")


def delta(A: SeriesPoly, X: Series, n: int) -> ExactScalar:
    """delta_n(A, X) = (sum_j A_j X^[j])_n"""
    A, X = _check_n(A, X, n)
    cores = core_powers(X, A.degree)
    total = Fraction(0)
    for j, coefficient in enumerate(A.coeffs):
        for k in coefficient.support:
            if k > n:
                break
            total += coefficient[k] * cores[j][n - k]
    return total


def epsilon(A: SeriesPoly, X: Series, n: int) -> ExactScalar:
    """epsilon_n(A, X): sum of j (A_j)_k (X^(j-1))_q X_p over k+p+q = n, q < p <= n/2"""
    A, X = _check_n(A, X, n)
    total = Fraction(0)
    for j in range(1, A.degree + 1):
        coefficient = A[j]
        if coefficient.is_zero:
            continue
        lower = power(X, j - 1)
        for p in range(1, half_floor(n) + 1):
            if X[p] == 0:
                continue
            inner = Fraction(0)
            for q in range(p):
                inner += coefficient[n - p - q] * lower[q]
            total += j * inner * X[p]
    return total


def gamma(A: SeriesPoly, X: Series, n: int, lam: int) -> ExactScalar:
    """gamma_{n,lambda}(A, X) = sum over lambda <= l < n/2 of A'(X)_l X_(n-l)"""
    A, X = _check_n(A, X, n)
    _check_lambda(n, lam)
    slope = derivative_at(A, X)
    return sum((slope[l] * X[n - l] for l in range(lam, below_half(n) + 1)), Fraction(0))


def head(A: SeriesPoly, X: Series, n: int, lam: int) -> ExactScalar:
    """Leading band sum over l < lambda of A'(X)_l X_(n-l)"""
    A, X = _check_n(A, X, n)
    _check_lambda(n, lam)
    slope = derivative_at(A, X)
    return sum((slope[l] * X[n - l] for l in range(lam)), Fraction(0))


@dataclass(frozen=True)
class DecompComponents:
    """The four parts of A(X)_n and the value they must add up to"""

    n: int
    lam: int
    head: Fraction
    gamma: Fraction
    delta: Fraction
    epsilon: Fraction
    alpha_n: Fraction

    @property
    def total(self) -> Fraction:
        return self.head + self.gamma + self.delta + self.epsilon

    @property
    def identity_ok(self) -> bool:
        return self.total == self.alpha_n


def decompose(A: SeriesPoly, X: Series, n: int, lam: int) -> DecompComponents:
    """All four components of A(X)_n; the exact identity is checked on every call"""
    A, X = _check_n(A, X, n)
    if n < 1:
        raise PreconditionError("decomposition needs n >= 1 (no lambda < n/2 exists for n = 0)")
    _check_lambda(n, lam)

    components = DecompComponents(
        n=n,
        lam=lam,
        head=head(A, X, n, lam),
        gamma=gamma(A, X, n, lam),
        delta=delta(A, X, n),
        epsilon=epsilon(A, X, n),
        alpha_n=eval_poly(A, X)[n],
    )
    if not components.identity_ok:
        raise InvariantViolation(
            f"head + gamma + delta + epsilon = {components.total} but A(X)_{n} = {components.alpha_n}"
        )
    return components


@dataclass
class RegionCount:
    count: int = 0
    total: Fraction = field(default_factory=Fraction)


@dataclass
class RegionTally:
    """Monomials of A(X)_n grouped by region, with exact sums"""

    n: int
    lam: int
    regions: Dict[str, RegionCount] = field(
        default_factory=lambda: {name: RegionCount() for name in REGIONS}
    )

    @property
    def total(self) -> Fraction:
        return sum((r.total for r in self.regions.values()), Fraction(0))

    @property
    def monomials(self) -> int:
        return sum(r.count for r in self.regions.values())

    def matches(self, components: DecompComponents) -> bool:
        return (
            self.regions["core"].total == components.delta
            and self.regions["epsilon"].total == components.epsilon
            and self.regions["gamma"].total == components.gamma
            and self.regions["head"].total == components.head
        )


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `parts` nonnegative integers adding to `total`"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        pieces = []
        for bar in bars:
            pieces.append(bar - previous - 1)
            previous = bar
        pieces.append(total + parts - 1 - previous - 1)
        yield tuple(pieces)


def region_tally(A: SeriesPoly, X: Series, n: int, lam: int) -> RegionTally:
    """Enumerate every monomial (A_j)_k x_l1...x_lj of A(X)_n and classify it.

    Core when every l_i <= (n-k)/2; otherwise the single large index p
    decides: epsilon for p <= n/2, gamma for n - p >= lambda, head otherwise.
    """
    A, X = _check_n(A, X, n)
    if n < 1:
        raise PreconditionError("region tally needs n >= 1")
    _check_lambda(n, lam)
    limits = config.get_partition_limits()
    if n > limits.get('max_index', 20) or A.degree > limits.get('max_degree', 5):
        raise UsageError(
            f"region tally is exponential in the degree; capped at n <= {limits.get('max_index', 20)}, "
            f"degree <= {limits.get('max_degree', 5)}"
        )

    tally = RegionTally(n=n, lam=lam)
    for j, coefficient in enumerate(A.coeffs):
        for k in coefficient.support:
            if k > n:
                break
            rest = n - k
            bound = half_floor(rest)
            for indices in _compositions(rest, j):
                value = coefficient[k]
                for l in indices:
                    value *= X[l]
                large = [l for l in indices if l > bound]
                if not large:
                    region = "core"
                elif len(large) > 1:
                    raise InvariantViolation(f"two indices above {bound} in {indices}")
                elif large[0] <= half_floor(n):
                    region = "epsilon"
                elif n - large[0] >= lam:
                    region = "gamma"
                else:
                    region = "head"
                tally.regions[region].count += 1
                tally.regions[region].total += value
    return tally
