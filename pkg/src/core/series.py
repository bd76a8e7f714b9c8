"""
Truncated formal power series over the rationals.

A Series of order N knows the coefficients c_0..c_N exactly and nothing
beyond; every operation returns a result of order equal to the smallest
input order and never extrapolates. Products pick a kernel by density:
mostly-zero operands (gap series) go through a support-keyed sparse
convolution, everything else through an integer-numerator dense
convolution. Both give identical results.
"""

import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from core.errors import (
    DivisionError,
    NotInvertibleError,
    PreconditionError,
    TruncationMismatchError,
    UsageError,
)
from core.exactnum import ExactScalar, ScalarLike, to_scalar
from utils.logger import logger

# a series is treated as sparse when at least this share of its coefficients is zero
SPARSE_ZERO_SHARE = Fraction(9, 10)

ZERO = Fraction(0)
ONE = Fraction(1)


class Series:
    """Truncated power series c_0 + c_1 z + ... + c_N z^N (order N)"""

    __slots__ = ("_coeffs", "_support", "_hash")

    def __init__(self, coeffs: Iterable[ScalarLike], order: Optional[int] = None):
        values = [to_scalar(c) for c in coeffs]
        if order is None:
            if not values:
                raise UsageError("a series needs at least one coefficient or an explicit order")
            order = len(values) - 1
        if isinstance(order, bool) or not isinstance(order, int) or order < 0:
            raise UsageError(f"truncation order must be a nonnegative integer, got {order!r}")
        if len(values) > order + 1:
            raise UsageError(
                f"{len(values)} coefficients given for order {order}; truncate explicitly"
            )
        values.extend([ZERO] * (order + 1 - len(values)))
        self._coeffs: Tuple[Fraction, ...] = tuple(values)
        self._support: Tuple[int, ...] = tuple(i for i, c in enumerate(values) if c != 0)
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([ONE], order)

    @classmethod
    def from_terms(cls, terms: Dict[int, Fraction], order: int) -> "Series":
        """Build from a {index: coefficient} map; indices beyond order are dropped"""
        values = [ZERO] * (order + 1)
        for index, value in terms.items():
            if 0 <= index <= order:
                values[index] = value
        return cls(values, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def support(self) -> Tuple[int, ...]:
        """Indices of the nonzero coefficients, ascending"""
        return self._support

    @property
    def is_sparse(self) -> bool:
        zeros = len(self._coeffs) - len(self._support)
        return Fraction(zeros, len(self._coeffs)) >= SPARSE_ZERO_SHARE

    @property
    def is_zero(self) -> bool:
        return not self._support

    @property
    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient (None for the zero series)"""
        return self._support[0] if self._support else None

    @property
    def degree(self) -> Optional[int]:
        """Index of the last nonzero coefficient (None for the zero series)"""
        return self._support[-1] if self._support else None

    def __getitem__(self, n: int) -> ExactScalar:
        if isinstance(n, slice) or n < 0:
            raise UsageError(f"series indices are nonnegative integers, got {n!r}")
        if n > self.order:
            raise UsageError(f"coefficient {n} lies beyond truncation order {self.order}")
        return self._coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise UsageError(f"cannot extend order {self.order} to {order}")
        if order == self.order:
            return self
        return Series(self._coeffs[:order + 1], order)

    def shift_down(self, k: int) -> "Series":
        """Divide by z^k; the caller guarantees c_0..c_{k-1} vanish"""
        if any(c != 0 for c in self._coeffs[:k]):
            raise UsageError(f"cannot divide by z^{k}: low coefficients are nonzero")
        if k > self.order:
            raise UsageError(f"shift {k} exceeds truncation order {self.order}")
        return Series(self._coeffs[k:], self.order - k)

    def padded(self, order: int) -> "Series":
        """Treat the known coefficients as an exact polynomial and extend with zeros"""
        if order < self.order:
            return self.truncate(order)
        return Series(self._coeffs, order)

    def scale(self, factor: ScalarLike) -> "Series":
        factor = to_scalar(factor)
        return Series([factor * c for c in self._coeffs], self.order)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return add(self, other.scale(-1))

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __mul__(self, other: "Series") -> "Series":
        return mul(self, other)

    def __pow__(self, m: int) -> "Series":
        return power(self, m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._coeffs)
        return self._hash

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{more}], order={self.order})"


class SeriesPoly:
    """Polynomial A(t) = A_0 + A_1 t + ... + A_m t^m with Series coefficients"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Series]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise UsageError("a series polynomial needs at least one coefficient")
        orders = {c.order for c in coeffs}
        if len(orders) != 1:
            raise TruncationMismatchError(
                f"polynomial coefficients have differing orders {sorted(orders)}"
            )
        self._coeffs: Tuple[Series, ...] = coeffs

    @classmethod
    def monomial(cls, j: int, order: int, coefficient: Optional[Series] = None) -> "SeriesPoly":
        """coefficient * t^j (coefficient defaults to the constant series 1)"""
        lead = coefficient if coefficient is not None else Series.one(order)
        return cls([Series.zero(order)] * j + [lead])

    @property
    def coeffs(self) -> Tuple[Series, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Stored length minus one; trailing zero series still count"""
        return len(self._coeffs) - 1

    @property
    def order(self) -> int:
        return self._coeffs[0].order

    @property
    def z_degree(self) -> Optional[int]:
        """max deg A_j over the coefficients, None when every A_j is zero"""
        degrees = [c.degree for c in self._coeffs if c.degree is not None]
        return max(degrees) if degrees else None

    def __getitem__(self, j: int) -> Series:
        return self._coeffs[j]

    def truncate(self, order: int) -> "SeriesPoly":
        return SeriesPoly([c.truncate(order) for c in self._coeffs])

    def padded(self, order: int) -> "SeriesPoly":
        return SeriesPoly([c.padded(order) for c in self._coeffs])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeriesPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"SeriesPoly(degree={self.degree}, order={self.order})"


def _require_same_order(a: Series, b: Series, operation: str) -> None:
    if a.order != b.order:
        raise TruncationMismatchError(
            f"{operation}: orders {a.order} and {b.order} differ; truncate to the minimum first"
        )


def add(a: Series, b: Series) -> Series:
    """Coefficientwise exact sum"""
    _require_same_order(a, b, "add")
    return Series([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)


def integer_form(coeffs: Sequence[Fraction]) -> Tuple[List[int], int]:
    """Numerators over a common denominator"""
    denominator = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (denominator // c.denominator) for c in coeffs], denominator


def _dense_convolution(a: Series, b: Series) -> Series:
    order = a.order
    a_num, a_den = integer_form(a.coeffs)
    b_num, b_den = integer_form(b.coeffs)
    denominator = a_den * b_den
    out = []
    for n in range(order + 1):
        total = 0
        for k in range(n + 1):
            if a_num[k]:
                total += a_num[k] * b_num[n - k]
        out.append(Fraction(total, denominator))
    return Series(out, order)


def _sparse_convolution(a: Series, b: Series) -> Series:
    order = a.order
    terms: Dict[int, Fraction] = {}
    b_support = b.support
    for i in a.support:
        ai = a.coeffs[i]
        for j in b_support:
            if i + j > order:
                break
            terms[i + j] = terms.get(i + j, ZERO) + ai * b.coeffs[j]
    return Series.from_terms(terms, order)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product through the common truncation order"""
    _require_same_order(a, b, "mul")
    if a.is_sparse or b.is_sparse:
        return _sparse_convolution(a, b)
    return _dense_convolution(a, b)


@lru_cache(maxsize=1024)
def power(a: Series, m: int) -> Series:
    """a^m by repeated multiplication; a^0 = 1"""
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise UsageError(f"series powers take nonnegative integer exponents, got {m!r}")
    if m == 0:
        return Series.one(a.order)
    if m == 1:
        return a
    return mul(power(a, m - 1), a)


@lru_cache(maxsize=256)
def eval_poly(A: SeriesPoly, X: Series) -> Series:
    """A(X) = sum_j A_j X^j, at the smaller of the two orders"""
    order = min(A.order, X.order)
    X = X.truncate(order)
    total = Series.zero(order)
    for j, coefficient in enumerate(A.coeffs):
        if coefficient.is_zero:
            continue
        total = add(total, mul(coefficient.truncate(order), power(X, j)))
    return total


def derivative_poly(A: SeriesPoly) -> SeriesPoly:
    """Formal derivative A'(t) = sum_j j A_j t^(j-1)"""
    if A.degree == 0:
        return SeriesPoly([Series.zero(A.order)])
    return SeriesPoly([A[j].scale(j) for j in range(1, A.degree + 1)])


def divide(D: Series, C: Series) -> Series:
    """The X with C X = D through the common order, for C_0 != 0"""
    order = min(D.order, C.order)
    C, D = C.truncate(order), D.truncate(order)
    c0 = C[0]
    if c0 == 0:
        raise DivisionError("divisor has zero constant term; cancel leading zeros first")

    c = [x / c0 for x in C.coeffs]
    d = [x / c0 for x in D.coeffs]
    c_support = [i for i in C.support if i > 0]
    x: List[Fraction] = []
    for n in range(order + 1):
        value = d[n]
        for i in c_support:
            if i > n:
                break
            value -= c[i] * x[n - i]
        x.append(value)
    logger.debug(f"divide: order {order}, divisor support {len(c_support) + 1}")
    return Series(x, order)


def cancel_common_zeros(C: Series, D: Series) -> Tuple[Series, Series]:
    """Shift C and D down by valuation(C) so that divide(D, C) applies"""
    _require_same_order(C, D, "cancel_common_zeros")
    vc = C.valuation
    if vc is None:
        raise NotInvertibleError("the divisor is the zero series")
    vd = D.valuation
    if vd is not None and vd < vc:
        raise NotInvertibleError(
            f"valuation of D ({vd}) is below valuation of C ({vc}); no series quotient"
        )
    if vc == 0:
        return C, D
    return C.shift_down(vc), D.shift_down(vc)


def require_index(X: Series, n: int, name: str = "n") -> None:
    """Common guard for coefficient queries"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise PreconditionError(f"{name} must be a nonnegative integer, got {n!r}")
    if n > X.order:
        raise PreconditionError(f"{name} = {n} exceeds truncation order {X.order}")
