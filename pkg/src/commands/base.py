"""
Shared types for the command families
"""

import argparse
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Callable, Dict, Optional

from core.errors import UsageError
from utils.config import config
from utils.helpers import load_json_file


class CommandStatus(IntEnum):
    """Outcome of one invocation; the value is the process exit code"""

    OK = 0
    CHECK_FAILED = 1
    USAGE_ERROR = 2
    DOMAIN_ERROR = 3


@dataclass
class CommandResult:
    status: CommandStatus
    report: Dict[str, Any] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return int(self.status)

    @classmethod
    def check(cls, passed: bool, report: Dict[str, Any], **summary: Any) -> "CommandResult":
        """OK when the requested check passed, CHECK_FAILED otherwise"""
        status = CommandStatus.OK if passed else CommandStatus.CHECK_FAILED
        return cls(status, report, summary)


Handler = Callable[[argparse.Namespace], CommandResult]


class CommandFamily:
    """Base class: maps action names to handler methods"""

    def __init__(self) -> None:
        self.handlers: Dict[str, Handler] = {}

    def process_command(self, action: str, args: argparse.Namespace) -> CommandResult:
        """Run one action of this family"""
        handler = self.handlers.get(action)
        if handler is None:
            raise UsageError(f"unknown action {action!r} for {type(self).__name__}")
        return handler(args)

    @staticmethod
    def load_input(path: str, decode: Callable[[Any], Any]) -> Any:
        """Read a JSON input file and decode it"""
        return decode(load_json_file(path))

    @staticmethod
    def limit(args: argparse.Namespace, name: str) -> int:
        """Guardrail value: the CLI override when given, else the configured limit"""
        override: Optional[int] = getattr(args, name, None)
        if override is not None:
            return override
        return config.get_limits().get(name, 0)
