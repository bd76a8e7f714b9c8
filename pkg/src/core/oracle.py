"""
Brute-force reference computations.

Nothing here calls the convolution or dynamic-programming code in
core.series / core.decomp: every coefficient is a literal sum over ordered
index tuples, so agreement between the two is meaningful. Enumeration is
C(n+m-1, m-1) tuples, hence the hard caps.
"""

from fractions import Fraction
from typing import Iterator, List, Tuple

from core.errors import InvariantViolation, OracleLimitError
from core.exactnum import ExactScalar
from core.series import Series, SeriesPoly
from utils.config import config


def _limits() -> Tuple[int, int, int]:
    limits = config.get_oracle_limits()
    return limits.get('max_power', 4), limits.get('max_index', 16), limits.get('max_degree', 4)


def _check_limits(m: int, n: int, what: str) -> None:
    max_power, max_index, _ = _limits()
    if m < 0 or n < 0:
        raise OracleLimitError(f"{what}: m and n must be nonnegative")
    if m > max_power or n > max_index:
        raise OracleLimitError(
            f"{what} is capped at m <= {max_power}, n <= {max_index} (got m={m}, n={n}); "
            "use series.power for larger cases"
        )


def _tuples(total: int, parts: int) -> Iterator[List[int]]:
    """Every ordered list of `parts` nonnegative integers summing to `total`"""
    if parts == 0:
        if total == 0:
            yield []
        return
    if parts == 1:
        yield [total]
        return
    for first in range(total + 1):
        for rest in _tuples(total - first, parts - 1):
            yield [first] + rest


def _coefficient(X: Series, k: int) -> Fraction:
    # raw tuple access keeps the oracle free of Series arithmetic
    return X.coeffs[k]


def _product(X: Series, indices: List[int]) -> Fraction:
    value = Fraction(1)
    for k in indices:
        value *= _coefficient(X, k)
    return value


def naive_power_coeff(X: Series, m: int, n: int) -> ExactScalar:
    """(X^m)_n as the sum over all ordered m-tuples adding to n"""
    _check_limits(m, n, "naive_power_coeff")
    if n > X.order:
        raise OracleLimitError(f"index {n} beyond truncation order {X.order}")
    return sum((_product(X, t) for t in _tuples(n, m)), Fraction(0))


def naive_core_tail_coeff(X: Series, m: int, n: int) -> Tuple[ExactScalar, ExactScalar]:
    """(core, tail) with core + m * tail = (X^m)_n, by splitting the tuples"""
    _check_limits(m, n, "naive_core_tail_coeff")
    if m < 1:
        raise OracleLimitError("the core/tail split needs m >= 1")
    if n > X.order:
        raise OracleLimitError(f"index {n} beyond truncation order {X.order}")

    core = Fraction(0)
    tail = Fraction(0)
    for t in _tuples(n, m):
        large = [k for k in t if 2 * k > n]
        if not large:
            core += _product(X, t)
        elif len(large) == 1:
            tail += _product(X, t)
        else:
            raise InvariantViolation(f"tuple {t} has two entries above {n}/2")
    return core, tail / m


def naive_core_tail_counts(m: int, n: int) -> Tuple[int, int]:
    """Number of core and tail tuples for (X^m)_n"""
    _check_limits(m, n, "naive_core_tail_counts")
    core = tail = 0
    for t in _tuples(n, m):
        if any(2 * k > n for k in t):
            tail += 1
        else:
            core += 1
    return core, tail


def naive_poly_coeff(A: SeriesPoly, X: Series, n: int) -> ExactScalar:
    """A(X)_n = sum_j sum_k (A_j)_k (X^j)_(n-k), every power enumerated"""
    _, _, max_degree = _limits()
    if A.degree > max_degree:
        raise OracleLimitError(f"naive_poly_coeff is capped at degree {max_degree}")
    if n > min(A.order, X.order):
        raise OracleLimitError(f"index {n} beyond truncation order")
    total = Fraction(0)
    for j, coefficient in enumerate(A.coeffs):
        for k in range(n + 1):
            a = coefficient.coeffs[k]
            if a != 0:
                total += a * naive_power_coeff(X, j, n - k)
    return total
