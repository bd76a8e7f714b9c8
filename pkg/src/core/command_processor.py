"""
Command processor for fps-transcend
"""

import argparse
import json
import time
from pathlib import Path
from typing import Any, Dict, Sequence, Tuple

from commands.base import CommandFamily, CommandResult, CommandStatus
from commands.construction_commands import GENERATORS, ConstructionCommands
from commands.growth_commands import MODES, GrowthCommands
from commands.verify_commands import VerifyCommands
from core.errors import DomainError, FpsError, InvariantViolation, UsageError
from utils.config import config
from utils.logger import logger

DATA_DIR = Path(__file__).parent.parent / "data"


class HelpRequested(Exception):
    """--help was given; carries the help text instead of printing it"""

    def __init__(self, prog: str, text: str):
        super().__init__(prog)
        self.command = " ".join(prog.split()[1:])
        self.text = text


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing and exiting"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)

    def print_help(self, file=None) -> None:
        raise HelpRequested(self.prog, self.format_help())


class CommandProcessor:
    """Parses argv, routes to a command family and wraps the outcome"""

    def __init__(self):
        self.commands: Dict[str, Tuple[str, str]] = {}
        self.responses: Dict[str, str] = {}
        self.families: Dict[str, CommandFamily] = {
            "verify_commands": VerifyCommands(),
            "growth_commands": GrowthCommands(),
            "construction_commands": ConstructionCommands(),
        }

        self._load_commands()
        self._load_responses()
        self.parser = self._build_parser()

        logger.debug("Command processor initialized")

    def _load_commands(self) -> None:
        """Load the routing table from JSON"""
        commands_file = DATA_DIR / "commands.json"
        raw_commands = None
        if commands_file.exists():
            try:
                with open(commands_file, 'r', encoding='utf-8') as file:
                    raw_commands = json.load(file)
            except (OSError, json.JSONDecodeError) as e:
                logger.error(f"Error loading commands: {e}")
        if raw_commands is None:
            logger.warning("Commands file not found, using default commands")
            raw_commands = self._get_default_commands()

        # Flatten the nested structure
        self.commands = {}
        for family, routes in raw_commands.items():
            for pattern, action in routes.items():
                self.commands[pattern] = (family, action)
        logger.debug(f"Loaded {len(self.commands)} command routes")

    def _load_responses(self) -> None:
        """Load summary templates from JSON"""
        responses_file = DATA_DIR / "responses.json"
        if responses_file.exists():
            try:
                with open(responses_file, 'r', encoding='utf-8') as file:
                    self.responses = json.load(file)
                return
            except (OSError, json.JSONDecodeError) as e:
                logger.error(f"Error loading responses: {e}")
        logger.warning("Responses file not found, using default responses")
        self.responses = self._get_default_responses()

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = UsageErrorParser(prog="fps-transcend", description="Exact formal power series checks")
        parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
        sub = parser.add_subparsers(dest="command", parser_class=UsageErrorParser)
        sub.required = True

        verify = sub.add_parser("verify", help="identity and bound checks")
        verify_sub = verify.add_subparsers(dest="action", parser_class=UsageErrorParser)
        verify_sub.required = True

        lemma1 = verify_sub.add_parser("lemma1")
        lemma1.add_argument("--series", required=True)
        lemma1.add_argument("--m-max", dest="m_max", type=int, required=True)
        lemma1.add_argument("--order", type=int)
        lemma1.add_argument("--oracle", action="store_true")
        self._add_guardrails(lemma1)

        theorem2 = verify_sub.add_parser("theorem2")
        theorem2.add_argument("--series", required=True)
        theorem2.add_argument("--poly", required=True)
        theorem2.add_argument("--n", type=int)
        theorem2.add_argument("--lambda", dest="lam", type=int)
        self._add_guardrails(theorem2)

        prop1 = verify_sub.add_parser("prop1")
        prop1.add_argument("--c", required=True, help="divisor series C with C_0 = 1")
        prop1.add_argument("--d", required=True, help="numerator series D")
        prop1.add_argument("--cbound", required=True)
        prop1.add_argument("--dbound", required=True)
        prop1.add_argument("--r", default="1")
        prop1.add_argument("--abs", help="archimedean or padic:P")

        criteria = sub.add_parser("criteria", help="transcendence criteria margins")
        criteria.add_argument("--growth", required=True)
        criteria.add_argument("--rho", required=True)
        criteria.add_argument("--lambda-max", dest="lambda_max", type=int)
        criteria.add_argument("--m-max", dest="m_max", type=int)
        criteria.add_argument("--n-range", dest="n_range", required=True)
        criteria.add_argument("--mode", choices=sorted(MODES), default="arch")

        liouville = sub.add_parser("liouville", help="gap series claims")
        liouville.add_argument("action", nargs="?", choices=["claims", "punchline"], default="claims")
        liouville.add_argument("--p", type=int, required=True)
        liouville.add_argument("--q", type=int, required=True)
        liouville.add_argument("--dmax", type=int, default=0)
        liouville.add_argument("--poly")

        gen = sub.add_parser("gen", help="example series")
        gen.add_argument("--kind", choices=sorted(GENERATORS), required=True)
        gen.add_argument("--order", type=int, required=True)
        gen.add_argument("--max-order", dest="max_order", type=int)

        partition = sub.add_parser("partition", help="region partition of A(X)_n")
        partition.add_argument("--poly", required=True)
        partition.add_argument("--series", required=True)
        partition.add_argument("--n", type=int, required=True)
        partition.add_argument("--lambda", dest="lam", type=int, required=True)

        classify = sub.add_parser("classify", help="heuristic growth class")
        classify.add_argument("--growth", required=True)
        classify.add_argument("--n-max", dest="n_max", type=int, required=True)
        classify.add_argument("--tau")

        witness = sub.add_parser("witness", help="first coefficient beyond the division bound")
        witness.add_argument("--growth", required=True)
        witness.add_argument("--c", required=True)
        witness.add_argument("--d", required=True)
        witness.add_argument("--r", default="1")
        witness.add_argument("--n-max", dest="n_max", type=int)

        return parser

    @staticmethod
    def _add_guardrails(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-order", dest="max_order", type=int)
        parser.add_argument("--max-degree", dest="max_degree", type=int)

    def run(self, argv: Sequence[str]) -> CommandResult:
        """Execute one invocation; never raises"""
        argv = list(argv)
        logger.log_command(argv)
        command = " ".join(argv[:2]) if argv else ""
        start = time.time()
        try:
            args = self.parser.parse_args(argv)
            if args.verbose:
                logger.set_level("DEBUG")
            command = self._command_key(args)
            result = self._execute_command(command, args)
        except HelpRequested as e:
            command = e.command
            result = CommandResult(CommandStatus.OK, {"help": e.text})
        except InvariantViolation as e:
            logger.log_error(e, command)
            result = CommandResult(CommandStatus.CHECK_FAILED, {"error": str(e)})
        except UsageError as e:
            result = CommandResult(CommandStatus.USAGE_ERROR, {"error": str(e)})
        except DomainError as e:
            result = CommandResult(CommandStatus.DOMAIN_ERROR, {"error": str(e)})
        except FpsError as e:
            logger.log_error(e, command)
            result = CommandResult(CommandStatus.DOMAIN_ERROR, {"error": str(e)})
        except Exception as e:
            logger.log_error(e, command)
            result = CommandResult(CommandStatus.DOMAIN_ERROR, {"error": f"{type(e).__name__}: {e}"})
        logger.log_result(command, result.status.name, time.time() - start)

        result.report.update(
            schema=config.get('report.schema', 'fps-transcend/1'),
            command=command,
            status=result.status.name,
        )
        return result

    @staticmethod
    def _command_key(args: argparse.Namespace) -> str:
        action = getattr(args, "action", None)
        return f"{args.command} {action}" if action else args.command

    def _execute_command(self, command: str, args: argparse.Namespace) -> CommandResult:
        """Route a parsed command to its family"""
        route = self.commands.get(command)
        if route is None:
            raise UsageError(f"unknown command {command!r}")
        family, action = route
        return self.families[family].process_command(action, args)

    def summarize(self, result: CommandResult) -> str:
        """One human-readable line for stderr"""
        if result.status in (CommandStatus.USAGE_ERROR, CommandStatus.DOMAIN_ERROR):
            template = self.responses.get(result.status.name.lower(), "{error}")
            return template.format(error=result.report.get("error", ""))
        fields: Dict[str, Any] = dict(result.summary)
        fields.update(command=result.report.get("command", ""), status=result.status.name)
        fallback = self.responses.get("default", "{command}: {status}")
        template = self.responses.get(result.report.get("command", ""), fallback)
        try:
            return template.format(**fields)
        except (KeyError, IndexError):
            return f"{fields['command']}: {fields['status']}"

    def _get_default_commands(self) -> Dict[str, Dict[str, str]]:
        """Get default routing table"""
        return {
            "verify_commands": {
                "verify lemma1": "lemma1",
                "verify theorem2": "theorem2",
                "verify prop1": "prop1",
                "partition": "partition",
            },
            "growth_commands": {
                "criteria": "criteria",
                "classify": "classify",
                "witness": "witness",
            },
            "construction_commands": {
                "liouville claims": "liouville",
                "liouville punchline": "punchline",
                "gen": "gen",
            },
        }

    def _get_default_responses(self) -> Dict[str, str]:
        """Get default summary templates"""
        return {
            "default": "{command}: {status}",
            "usage_error": "usage error: {error}",
            "domain_error": "domain error: {error}",
        }
