"""
Basic tests for fps-transcend: configuration and helpers
"""

import logging
import pytest
import sys
from fractions import Fraction
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core.errors import DomainError, UsageError
from utils.config import Config, config
from utils.logger import logger
from utils.helpers import (
    below_half,
    dump_report,
    format_rational,
    half_floor,
    load_json_file,
    parse_index_range,
    parse_positive_rational,
    parse_rational,
)


def test_config_loading():
    """Test configuration loading"""
    assert config is not None
    assert config.get('report.schema') == 'fps-transcend/1'
    assert config.get('limits.max_order') == 60
    assert config.get('limits.max_degree') == 6


def test_config_get():
    """Test configuration get method"""
    assert config.get('criteria.lambda_max') == 3
    assert config.get('non.existent', 'default') == 'default'
    assert config.get_oracle_limits()['max_power'] == 4


def test_config_override_file(tmp_path):
    """A user file overrides only the keys it names"""
    path = tmp_path / "config.yaml"
    path.write_text("limits:\n  max_order: 12\n", encoding="utf-8")
    custom = Config(str(path))
    assert custom.get('limits.max_order') == 12
    assert custom.get('limits.max_degree') == 6
    assert custom.loaded_from == str(path)


def test_config_missing_file_uses_defaults(tmp_path):
    custom = Config(str(tmp_path / "absent.yaml"))
    assert custom.loaded_from is None
    assert custom.get('oracle.max_index') == 16
    assert not (tmp_path / "absent.yaml").exists()


@pytest.mark.parametrize("text,expected", [
    ("3", Fraction(3)),
    ("-3/2", Fraction(-3, 2)),
    ("4/6", Fraction(2, 3)),
    (" 7 ", Fraction(7)),
    (5, Fraction(5)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["1/0", "abc", "1.5", "", True, 1.5, None])
def test_parse_rational_rejects(bad):
    with pytest.raises(DomainError):
        parse_rational(bad)


def test_logger_result_line():
    records = []
    handler = logging.Handler()
    handler.emit = records.append
    previous = logger.logger.level
    logger.logger.addHandler(handler)
    logger.set_level("INFO")
    try:
        logger.log_result("gen", "OK", 0.25)
        logger.log_result("", "USAGE_ERROR", 0)
    finally:
        logger.logger.removeHandler(handler)
        logger.logger.setLevel(previous)
    assert [r.getMessage() for r in records] == ["gen -> OK in 0.250s", "parse -> USAGE_ERROR in 0.000s"]


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-2)) == "-2"


def test_parse_positive_rational():
    assert parse_positive_rational("1/2", "r") == Fraction(1, 2)
    with pytest.raises(UsageError):
        parse_positive_rational("0", "r")


def test_parse_index_range():
    assert parse_index_range("20:60") == (20, 60)
    for bad in ["60:20", "20", "a:b"]:
        with pytest.raises(UsageError):
            parse_index_range(bad)


def test_half_helpers():
    """floor(n/2) against ceil(n/2) - 1: equal exactly for odd n"""
    for n in range(0, 40):
        assert (half_floor(n) == below_half(n)) == (n % 2 == 1)
        assert 2 * half_floor(n) <= n
        assert 2 * below_half(n) < n or n == 0
    assert below_half(0) == -1


def test_load_json_file(tmp_path):
    good = tmp_path / "good.json"
    good.write_text('{"a": 1}', encoding="utf-8")
    assert load_json_file(good) == {"a": 1}

    bad = tmp_path / "bad.json"
    bad.write_text('{"a": ', encoding="utf-8")
    with pytest.raises(DomainError):
        load_json_file(bad)
    with pytest.raises(DomainError):
        load_json_file(tmp_path / "missing.json")


def test_dump_report_sorted():
    assert dump_report({"b": 1, "a": 2}, indent=0).index('"a"') < dump_report({"b": 1, "a": 2}, indent=0).index('"b"')


if __name__ == "__main__":
    pytest.main([__file__])
