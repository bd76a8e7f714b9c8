"""
Gap-series checks and example series generation
"""

import argparse

from commands.base import CommandFamily, CommandResult
from core import codec
from core.constructions import (
    factorial_series,
    liouville_series,
    padic_superfactorial_series,
    superfactorial_series,
    verify_gap_claims,
    verify_gap_punchline,
)
from core.errors import UsageError

GENERATORS = {
    "liouville": liouville_series,
    "factorial": factorial_series,
    "superfactorial": superfactorial_series,
    "padic_superfactorial": padic_superfactorial_series,
}


class ConstructionCommands(CommandFamily):
    """liouville claims / liouville punchline / gen"""

    def __init__(self) -> None:
        super().__init__()
        self.handlers = {
            "liouville": self.liouville_claims,
            "punchline": self.liouville_punchline,
            "gen": self.generate,
        }

    def liouville_claims(self, args: argparse.Namespace) -> CommandResult:
        report = verify_gap_claims(args.p, args.q, args.dmax)
        return CommandResult.check(
            report.passed,
            codec.encode_gap_claims(report),
            c_index=report.c_index,
            radius=report.zero_window_radius_verified,
            claimed_radius=report.claimed_radius,
        )

    def liouville_punchline(self, args: argparse.Namespace) -> CommandResult:
        if not args.poly:
            raise UsageError("liouville punchline needs --poly")
        A = self.load_input(args.poly, codec.decode_poly)
        report = verify_gap_punchline(A, args.p, args.q)
        return CommandResult.check(
            report.status == "PASS",
            codec.encode_punchline(report),
            result=report.status,
            required_q=report.required_q,
        )

    def generate(self, args: argparse.Namespace) -> CommandResult:
        """Emit one of the example series as a series document"""
        max_order = self.limit(args, "max_order")
        if args.kind in ("liouville", "factorial") and args.order > max_order:
            raise UsageError(f"order {args.order} exceeds the limit {max_order}; raise it with --max-order")
        series = GENERATORS[args.kind](args.order)
        return CommandResult.check(True, {"kind": args.kind, "series": codec.encode_series(series)},
                                   kind=args.kind, order=series.order)
