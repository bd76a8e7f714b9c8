"""
Identity and bound checks: the power decomposition, the four-part
decomposition of A(X)_n, the division bound and the region partition
"""

import argparse
from typing import Any, Dict, List, Optional, Tuple

from commands.base import CommandFamily, CommandResult
from core import codec
from core.decomp import core_powers, decompose, region_tally, tail_power
from core.errors import InvariantViolation, OracleLimitError, UsageError
from core.exactnum import AbsValue
from core.growth import check_prop1_bound
from core.oracle import naive_core_tail_coeff, naive_power_coeff
from core.series import Series, power
from utils.config import config
from utils.helpers import format_rational, parse_positive_rational
from utils.logger import logger

# failures listed in a report; the count is always complete
MAX_LISTED_FAILURES = 20


class VerifyCommands(CommandFamily):
    """verify lemma1 / theorem2 / prop1 and partition"""

    def __init__(self) -> None:
        super().__init__()
        self.handlers = {
            "lemma1": self.verify_lemma1,
            "theorem2": self.verify_theorem2,
            "prop1": self.verify_prop1,
            "partition": self.partition,
        }

    def verify_lemma1(self, args: argparse.Namespace) -> CommandResult:
        """X^m = X^[m] + m X^<m> coefficientwise for m <= m_max, n <= order"""
        X = self.load_input(args.series, codec.decode_series)
        order = self._sweep_order(args, X.order)
        if args.m_max < 0:
            raise UsageError(f"--m-max must be nonnegative, got {args.m_max}")
        if args.m_max > self.limit(args, "max_degree"):
            raise UsageError(f"--m-max {args.m_max} exceeds the sweep limit; raise it with --max-degree")
        X = X.truncate(order)

        cores = core_powers(X, args.m_max)
        failures: List[Dict[str, Any]] = []
        checked = 0
        for m in range(args.m_max + 1):
            full = power(X, m)
            tail: Optional[Series] = tail_power(X, m) if m >= 1 else None
            for n in range(order + 1):
                checked += 1
                rhs = cores[m][n] + (m * tail[n] if tail is not None else 0)
                if full[n] != rhs:
                    failures.append({"m": m, "n": n, "power": format_rational(full[n]), "split": format_rational(rhs)})

        oracle_checked = 0
        if args.oracle:
            oracle_checked = self._oracle_cross_check(X, args.m_max, order, cores, failures)

        report = {
            "order": order,
            "m_max": args.m_max,
            "checked": checked,
            "oracle_checked": oracle_checked,
            "failure_count": len(failures),
            "failures": failures[:MAX_LISTED_FAILURES],
        }
        return CommandResult.check(not failures, report, checked=checked, failures=len(failures))

    def _oracle_cross_check(
        self,
        X: Series,
        m_max: int,
        order: int,
        cores: Tuple[Series, ...],
        failures: List[Dict[str, Any]],
    ) -> int:
        """Compare against tuple enumeration wherever the oracle caps allow"""
        limits = config.get_oracle_limits()
        m_cap = min(m_max, limits.get('max_power', 4))
        n_cap = min(order, limits.get('max_index', 16))
        checked = 0
        for m in range(m_cap + 1):
            for n in range(n_cap + 1):
                try:
                    expected = naive_power_coeff(X, m, n)
                    if m >= 1:
                        core, tail = naive_core_tail_coeff(X, m, n)
                        if core != cores[m][n] or tail != tail_power(X, m)[n]:
                            failures.append({"m": m, "n": n, "oracle": "core/tail"})
                except OracleLimitError as e:
                    logger.debug(f"oracle skipped at m={m}, n={n}: {e}")
                    continue
                if expected != power(X, m)[n]:
                    failures.append({"m": m, "n": n, "oracle": "power"})
                checked += 1
        return checked

    def verify_theorem2(self, args: argparse.Namespace) -> CommandResult:
        """head + gamma + delta + epsilon = A(X)_n over the requested (n, lambda)"""
        X = self.load_input(args.series, codec.decode_series)
        A = self.load_input(args.poly, codec.decode_poly)
        order = min(A.order, X.order)
        if args.n is None:
            order = self._sweep_order(args, order)
        if A.degree > self.limit(args, "max_degree"):
            raise UsageError(f"polynomial degree {A.degree} exceeds the sweep limit; raise it with --max-degree")
        A, X = A.truncate(order), X.truncate(order)

        points = self._theorem2_points(order, args.n, args.lam)
        components: List[Dict[str, Any]] = []
        failures: List[Dict[str, Any]] = []
        for n, lam in points:
            try:
                result = decompose(A, X, n, lam)
            except InvariantViolation as e:
                failures.append({"n": n, "lambda": lam, "error": str(e)})
                continue
            if args.n is not None:
                components.append(codec.encode_components(result))

        report: Dict[str, Any] = {
            "order": order,
            "degree": A.degree,
            "checked": len(points),
            "failure_count": len(failures),
            "failures": failures[:MAX_LISTED_FAILURES],
        }
        if args.n is not None:
            report["components"] = components
        return CommandResult.check(not failures, report, checked=len(points), failures=len(failures))

    @staticmethod
    def _theorem2_points(order: int, n: Optional[int], lam: Optional[int]) -> List[Tuple[int, int]]:
        if n is not None and not 1 <= n <= order:
            raise UsageError(f"--n must lie in 1..{order}, got {n}")
        if lam is not None and lam < 0:
            raise UsageError(f"--lambda must be nonnegative, got {lam}")
        indices = [n] if n is not None else list(range(1, order + 1))
        points = []
        for index in indices:
            lambdas = [lam] if lam is not None else list(range(0, (index + 1) // 2))
            for value in lambdas:
                if 2 * value >= index:
                    if n is not None:
                        raise UsageError(f"--lambda must be below n/2, got lambda={value}, n={index}")
                    continue
                points.append((index, value))
        if not points:
            raise UsageError("no (n, lambda) pair satisfies lambda < n/2 in the requested range")
        return points

    def verify_prop1(self, args: argparse.Namespace) -> CommandResult:
        """|X_n| <= d (1+c)^n r^n for X = D / C"""
        C = self.load_input(args.c, codec.decode_series)
        D = self.load_input(args.d, codec.decode_series)
        c = parse_positive_rational(args.cbound, "--cbound")
        d = parse_positive_rational(args.dbound, "--dbound")
        r = parse_positive_rational(args.r, "--r")
        abs_value = codec.parse_abs_label(args.abs) if args.abs else AbsValue.archimedean()

        report = check_prop1_bound(C, D, c, d, r, abs_value)
        return CommandResult.check(report.passed, codec.encode_prop1(report), result=report.status, order=report.order)

    def partition(self, args: argparse.Namespace) -> CommandResult:
        """Classify every monomial of A(X)_n into the four regions"""
        X = self.load_input(args.series, codec.decode_series)
        A = self.load_input(args.poly, codec.decode_poly)
        tally = region_tally(A, X, args.n, args.lam)
        components = decompose(A, X, args.n, args.lam)
        report = codec.encode_tally(tally)
        report["components"] = codec.encode_components(components)
        report["matches_components"] = tally.matches(components)
        return CommandResult.check(
            tally.matches(components), report, monomials=tally.monomials, n=args.n, lam=args.lam
        )

    def _sweep_order(self, args: argparse.Namespace, available: int) -> int:
        requested = getattr(args, "order", None)
        order = available if requested is None else requested
        if order > available:
            raise UsageError(f"requested order {order} exceeds the input's truncation order {available}")
        max_order = self.limit(args, "max_order")
        if order > max_order:
            raise UsageError(f"order {order} exceeds the sweep limit {max_order}; raise it with --max-order")
        return order
