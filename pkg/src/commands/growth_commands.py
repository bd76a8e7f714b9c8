"""
Growth-law commands: transcendence criteria margins, the growth classifier
and the irrationality witness search
"""

import argparse

from commands.base import CommandFamily, CommandResult
from core import codec
from core.growth import check_criteria, classify_growth, eval_log_abs, irrationality_witness
from utils.config import config
from utils.helpers import parse_index_range, parse_positive_rational

MODES = {"arch": "archimedean", "nonarch": "nonarchimedean"}


class GrowthCommands(CommandFamily):
    """criteria / classify / witness"""

    def __init__(self) -> None:
        super().__init__()
        self.handlers = {
            "criteria": self.criteria,
            "classify": self.classify,
            "witness": self.witness,
        }

    def criteria(self, args: argparse.Namespace) -> CommandResult:
        """Margins of every criterion in the mode over the (lambda, m, n) grid"""
        spec = self.load_input(args.growth, codec.decode_growth)
        rho = self.load_input(args.rho, codec.decode_rho)
        defaults = config.get_criteria_defaults()
        lambda_max = args.lambda_max if args.lambda_max is not None else defaults.get('lambda_max', 3)
        m_max = args.m_max if args.m_max is not None else defaults.get('m_max', 5)

        report = check_criteria(
            spec,
            rho,
            lambda_max=lambda_max,
            m_max=m_max,
            n_range=parse_index_range(args.n_range),
            mode=MODES[args.mode],
        )
        verdicts = [v.value for v in report.verdicts.values()]
        return CommandResult.check(
            report.all_satisfied,
            codec.encode_criteria(report),
            mode=report.mode,
            satisfied=verdicts.count("SATISFIED_EMPIRICALLY"),
            total=len(verdicts),
        )

    def classify(self, args: argparse.Namespace) -> CommandResult:
        """Exponential / superexponential call; output only"""
        spec = self.load_input(args.growth, codec.decode_growth)
        tau = parse_positive_rational(args.tau, "--tau") if args.tau else None
        result = classify_growth(spec, args.n_max, tau)
        return CommandResult.check(True, codec.encode_growth_class(result), label=result.label)

    def witness(self, args: argparse.Namespace) -> CommandResult:
        """First n whose coefficient beats every bound a rational X = D / C would obey"""
        spec = self.load_input(args.growth, codec.decode_growth)
        c = parse_positive_rational(args.c, "--c")
        d = parse_positive_rational(args.d, "--d")
        r = parse_positive_rational(args.r, "--r")
        found = irrationality_witness(spec, c, d, r, args.n_max)

        report = {
            "c": str(c),
            "d": str(d),
            "r": str(r),
            "n_max": args.n_max if args.n_max is not None else config.get('limits.witness_max_n', 400),
            "witness": found,
        }
        if found is not None:
            report["log2_coefficient"] = codec.encode_interval(eval_log_abs(spec, found))
        return CommandResult.check(found is not None, report, witness=found if found is not None else "none")
