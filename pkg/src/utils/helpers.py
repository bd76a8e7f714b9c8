"""
Helper utilities for fps-transcend
"""

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Tuple, Union

from core.errors import DomainError, UsageError


RATIONAL_PATTERN = re.compile(r'^-?\d+(/\d+)?$')

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse a rational literal "p", "-p" or "p/q" (q > 0) into lowest terms"""
    if isinstance(value, bool):
        raise DomainError(f"not a rational literal: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DomainError(f"rational literals must be strings, got {type(value).__name__}")

    text = value.strip()
    if not RATIONAL_PATTERN.match(text):
        raise DomainError(f"not a rational literal: {value!r}")
    if '/' in text and int(text.split('/')[1]) == 0:
        raise DomainError(f"zero denominator in {value!r}")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """Format a rational as "p" or "p/q" """
    return str(Fraction(value))


def parse_positive_rational(value: RationalLike, name: str) -> Fraction:
    """Parse a rational that must be strictly positive"""
    result = parse_rational(value)
    if result <= 0:
        raise UsageError(f"{name} must be positive, got {format_rational(result)}")
    return result


def parse_index_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive index range "A:B" """
    match = re.match(r'^\s*(\d+)\s*:\s*(\d+)\s*$', text or "")
    if not match:
        raise UsageError(f"expected an index range A:B, got {text!r}")
    start, stop = int(match.group(1)), int(match.group(2))
    if start > stop:
        raise UsageError(f"empty index range {text!r}")
    return start, stop


def load_json_file(path: Union[str, Path]) -> Any:
    """Read and decode a JSON input file"""
    try:
        with open(path, 'r', encoding='utf-8') as file:
            return json.load(file)
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise DomainError(f"invalid JSON in {path}: {e}") from e


def dump_report(report: Any, indent: int = 2) -> str:
    """Serialize a report deterministically"""
    return json.dumps(report, sort_keys=True, indent=indent, ensure_ascii=False)


def half_floor(n: int) -> int:
    """Largest k with k <= n/2"""
    return n // 2


def below_half(n: int) -> int:
    """Largest l with l < n/2 (-1 when n = 0)"""
    return (n + 1) // 2 - 1
