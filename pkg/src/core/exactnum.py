"""
Exact rational scalars, archimedean and p-adic absolute values, and
rigorous log2-magnitude intervals.

Magnitudes are never converted to floating point. A LogMagInterval [lo, hi]
certifies 2^lo <= |x| <= 2^hi; the two distinguished values NEG_INFINITY
(|x| = 0) and POS_INFINITY (a margin whose right-hand side vanished) carry
no bounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from sympy import isprime, multiplicity

from core.errors import DomainError, InvariantViolation, UsageError
from utils.helpers import parse_rational

ExactScalar = Fraction
ScalarLike = Union[Fraction, int, str]

ARCHIMEDEAN = "archimedean"
PADIC = "padic"


def to_scalar(value: ScalarLike) -> ExactScalar:
    """Coerce an int, Fraction or rational literal to an ExactScalar"""
    return parse_rational(value)


def abs_archimedean(x: ScalarLike) -> Fraction:
    """The ordinary absolute value |numerator|/denominator"""
    return abs(to_scalar(x))


def padic_valuation(x: ScalarLike, p: int) -> Optional[int]:
    """v_p(x) by repeated exact division; None stands for +infinity (x = 0)"""
    _require_prime(p)
    x = to_scalar(x)
    if x == 0:
        return None
    return int(multiplicity(p, abs(x.numerator))) - int(multiplicity(p, x.denominator))


def abs_padic(x: ScalarLike, p: int) -> Fraction:
    """|x|_p = p^(-v_p(x)), with |0|_p = 0"""
    valuation = padic_valuation(x, p)
    if valuation is None:
        return Fraction(0)
    return Fraction(p) ** -valuation


def _require_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not isprime(p):
        raise DomainError(f"p-adic absolute value needs a prime, got {p!r}")


@dataclass(frozen=True)
class AbsValue:
    """An absolute value on the rationals: archimedean or p-adic"""

    kind: str = ARCHIMEDEAN
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == ARCHIMEDEAN:
            if self.p is not None:
                raise DomainError("the archimedean absolute value takes no prime")
        elif self.kind == PADIC:
            _require_prime(self.p)
        else:
            raise DomainError(f"unknown absolute value {self.kind!r}")

    @classmethod
    def archimedean(cls) -> "AbsValue":
        return cls(ARCHIMEDEAN)

    @classmethod
    def padic(cls, p: int) -> "AbsValue":
        return cls(PADIC, p)

    @property
    def is_nonarchimedean(self) -> bool:
        return self.kind == PADIC

    @property
    def label(self) -> str:
        return ARCHIMEDEAN if self.kind == ARCHIMEDEAN else f"{PADIC}:{self.p}"

    def evaluate(self, x: ScalarLike) -> Fraction:
        """|x| under this absolute value"""
        if self.kind == ARCHIMEDEAN:
            return abs_archimedean(x)
        return abs_padic(x, self.p)

    def __call__(self, x: ScalarLike) -> Fraction:
        return self.evaluate(x)


@dataclass(frozen=True)
class LogMagInterval:
    """Enclosure [lo, hi] of log2 of a magnitude, or one of the two infinities"""

    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)
    infinity: int = 0

    def __post_init__(self) -> None:
        if self.infinity not in (-1, 0, 1):
            raise InvariantViolation(f"bad infinity marker {self.infinity}")
        object.__setattr__(self, 'lo', Fraction(self.lo))
        object.__setattr__(self, 'hi', Fraction(self.hi))
        if self.infinity == 0 and self.lo > self.hi:
            raise InvariantViolation(f"empty log interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Union[Fraction, int]) -> "LogMagInterval":
        return cls(Fraction(value), Fraction(value))

    @property
    def is_neg_infinity(self) -> bool:
        return self.infinity < 0

    @property
    def is_pos_infinity(self) -> bool:
        return self.infinity > 0

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    @property
    def width(self) -> Fraction:
        if not self.is_finite:
            raise UsageError("an infinite log interval has no width")
        return self.hi - self.lo

    def __add__(self, other: "LogMagInterval") -> "LogMagInterval":
        if self.is_finite and other.is_finite:
            return LogMagInterval(self.lo + other.lo, self.hi + other.hi)
        if self.infinity * other.infinity < 0:
            raise InvariantViolation("sum of log intervals -inf + +inf is undefined")
        return self if not self.is_finite else other

    def __sub__(self, other: "LogMagInterval") -> "LogMagInterval":
        # A vanishing right-hand side makes the margin unbounded above.
        if other.is_neg_infinity or self.is_pos_infinity:
            return POS_INFINITY
        if self.is_neg_infinity or other.is_pos_infinity:
            return NEG_INFINITY
        return LogMagInterval(self.lo - other.hi, self.hi - other.lo)

    def scale(self, m: int) -> "LogMagInterval":
        """log2 of the m-th power; m = 0 gives log2 1 = 0"""
        if m < 0:
            raise UsageError(f"log intervals scale by nonnegative integers, got {m}")
        if m == 0:
            return LogMagInterval.exact(0)
        if not self.is_finite:
            return self
        return LogMagInterval(self.lo * m, self.hi * m)

    def is_negative(self) -> bool:
        """True when the enclosed value is certainly below zero"""
        if not self.is_finite:
            return self.is_neg_infinity
        return self.hi < 0

    def is_nonnegative(self) -> bool:
        """True when the enclosed value is certainly at least zero"""
        if not self.is_finite:
            return self.is_pos_infinity
        return self.lo >= 0

    def contains(self, value: Fraction) -> bool:
        return self.is_finite and self.lo <= value <= self.hi

    def encloses(self, magnitude: ScalarLike) -> bool:
        """Exact check 2^lo <= magnitude <= 2^hi (integral bounds only)"""
        magnitude = to_scalar(magnitude)
        if magnitude == 0:
            return self.is_neg_infinity
        if not self.is_finite:
            return False
        if self.lo.denominator != 1 or self.hi.denominator != 1:
            raise UsageError("exact enclosure checks need integral bounds")
        two = Fraction(2)
        return two ** int(self.lo) <= magnitude <= two ** int(self.hi)

    def __str__(self) -> str:
        if self.is_neg_infinity:
            return "-inf"
        if self.is_pos_infinity:
            return "+inf"
        return f"[{self.lo}, {self.hi}]"


NEG_INFINITY = LogMagInterval(infinity=-1)
POS_INFINITY = LogMagInterval(infinity=1)


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def log2_interval(mag: ScalarLike) -> LogMagInterval:
    """Bit-length enclosure of log2 of a nonnegative rational (width <= 2)"""
    mag = to_scalar(mag)
    if mag < 0:
        raise DomainError(f"log2 of a negative magnitude {mag}")
    if mag == 0:
        return NEG_INFINITY
    a, b = mag.numerator, mag.denominator
    shift = a.bit_length() - b.bit_length()
    if _is_power_of_two(a) and _is_power_of_two(b):
        return LogMagInterval.exact(shift)
    return LogMagInterval(shift - 1, shift + 1)


def interval_max(intervals: Iterable[LogMagInterval]) -> LogMagInterval:
    """Enclosure of log2 max|x_i| given enclosures of each log2|x_i|"""
    finite = [iv for iv in intervals if not iv.is_neg_infinity]
    if not finite:
        return NEG_INFINITY
    if any(iv.is_pos_infinity for iv in finite):
        return POS_INFINITY
    return LogMagInterval(max(iv.lo for iv in finite), max(iv.hi for iv in finite))
