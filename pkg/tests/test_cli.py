"""
End-to-end tests for the command line: JSON reports and exit codes
"""

import json
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core import codec
from core.constructions import factorial_series
from core.series import Series, SeriesPoly
from main import main

PRIMES = Series([2, 3, 5, 7, 11], 4)


def write_json(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def prime_files(tmp_path):
    order = 4
    cube = SeriesPoly([Series.zero(order), Series.zero(order), Series.zero(order), Series.one(order)])
    return (
        write_json(tmp_path, "series.json", codec.encode_series(PRIMES)),
        write_json(tmp_path, "cube.json", codec.encode_poly(cube)),
    )


@pytest.fixture
def superfactorial_files(tmp_path):
    return (
        write_json(tmp_path, "growth.json", {"kind": "growth", "type": "factorial_exponent", "a": "1"}),
        write_json(tmp_path, "rho.json", {"kind": "rho", "type": "factorial"}),
    )


def test_report_envelope(capsys):
    code, report = run_cli(capsys, "gen", "--kind", "liouville", "--order", "20")
    assert code == 0
    assert report["schema"] == "fps-transcend/1"
    assert report["command"] == "gen"
    assert report["status"] == "OK"
    coeffs = report["series"]["coeffs"]
    assert [i for i, c in enumerate(coeffs) if c != "0"] == [1, 2, 4, 8, 16]


def test_gen_guardrail(capsys):
    code, report = run_cli(capsys, "gen", "--kind", "factorial", "--order", "100")
    assert code == 2
    assert report["status"] == "USAGE_ERROR"
    code, _ = run_cli(capsys, "gen", "--kind", "factorial", "--order", "100", "--max-order", "100")
    assert code == 0


def test_verify_lemma1(capsys, prime_files):
    series, _ = prime_files
    code, report = run_cli(capsys, "verify", "lemma1", "--series", series, "--m-max", "4", "--oracle")
    assert code == 0
    assert report["command"] == "verify lemma1"
    assert report["checked"] == 5 * 5
    assert report["oracle_checked"] > 0
    assert report["failure_count"] == 0


def test_verify_lemma1_degree_guardrail(capsys, prime_files):
    series, _ = prime_files
    code, _ = run_cli(capsys, "verify", "lemma1", "--series", series, "--m-max", "7")
    assert code == 2
    code, _ = run_cli(capsys, "verify", "lemma1", "--series", series, "--m-max", "7", "--max-degree", "7")
    assert code == 0


def test_verify_theorem2_components(capsys, prime_files):
    series, cube = prime_files
    code, report = run_cli(capsys, "verify", "theorem2", "--series", series, "--poly", cube,
                           "--n", "4", "--lambda", "1")
    assert code == 0
    (components,) = report["components"]
    assert components["identity_ok"] is True
    assert components["alpha_n"] == "669"


def test_verify_theorem2_sweep(capsys, prime_files):
    series, cube = prime_files
    code, report = run_cli(capsys, "verify", "theorem2", "--series", series, "--poly", cube)
    assert code == 0
    assert report["checked"] == 1 + 1 + 2 + 2
    assert "components" not in report


def test_partition(capsys, prime_files):
    series, cube = prime_files
    code, report = run_cli(capsys, "partition", "--poly", cube, "--series", series, "--n", "4", "--lambda", "1")
    assert code == 0
    assert report["monomials"] == 15
    assert report["regions"]["core"]["count"] == 6
    assert report["matches_components"] is True


def test_verify_prop1(capsys, tmp_path):
    order = 30
    C = write_json(tmp_path, "c.json", codec.encode_series(Series([1, -1], order)))
    D = write_json(tmp_path, "d.json", codec.encode_series(Series.one(order)))
    code, report = run_cli(capsys, "verify", "prop1", "--c", C, "--d", D, "--cbound", "2", "--dbound", "2")
    assert code == 0
    assert report["result"] == "PASS"
    assert report["abs"] == "archimedean"

    code, report = run_cli(capsys, "verify", "prop1", "--c", C, "--d", D, "--cbound", "1", "--dbound", "2")
    assert code == 1
    assert report["result"] == "PREMISE_FAIL"


def test_verify_prop1_bad_inputs(capsys, tmp_path):
    C = write_json(tmp_path, "c.json", codec.encode_series(Series([2, 1], 1)))
    D = write_json(tmp_path, "d.json", codec.encode_series(Series([1, 0], 1)))
    code, _ = run_cli(capsys, "verify", "prop1", "--c", C, "--d", D, "--cbound", "3", "--dbound", "3")
    assert code == 2
    code, _ = run_cli(capsys, "verify", "prop1", "--c", C, "--d", D, "--cbound", "3", "--dbound", "3",
                      "--abs", "padic:4")
    assert code == 3


def test_criteria_superfactorial(capsys, superfactorial_files):
    growth, rho = superfactorial_files
    code, report = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho,
                           "--lambda-max", "3", "--m-max", "5", "--n-range", "20:60")
    assert code == 0
    assert report["mode"] == "archimedean"
    assert report["precondition_x0"] is True
    assert report["empirical"] is True
    assert len(report["verdicts"]) == 24
    assert {v["verdict"] for v in report["verdicts"]} == {"SATISFIED_EMPIRICALLY"}


def test_criteria_nonarchimedean(capsys, tmp_path):
    growth = write_json(tmp_path, "growth.json", {
        "type": "factorial_exponent", "a": "1", "abs": {"type": "padic", "p": 2},
    })
    rho = write_json(tmp_path, "rho.json", {"type": "one"})
    code, report = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho,
                           "--n-range", "10:60", "--mode", "nonarch")
    assert code == 0
    assert {t["kind"] for t in report["margin_tables"]} == {"NA1", "NA2", "NA_COMBINED"}


def test_criteria_geometric_fails(capsys, tmp_path, superfactorial_files):
    _, rho = superfactorial_files
    growth = write_json(tmp_path, "geometric.json", {"type": "geometric", "log2r": "1"})
    code, report = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho, "--n-range", "20:60")
    assert code == 1
    assert report["status"] == "CHECK_FAILED"
    assert {v["verdict"] for v in report["verdicts"]} == {"VIOLATED"}


def test_criteria_precondition_is_usage_error(capsys, superfactorial_files):
    growth, rho = superfactorial_files
    code, _ = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho, "--n-range", "5:60")
    assert code == 2


def test_liouville_claims(capsys):
    code, report = run_cli(capsys, "liouville", "--p", "2", "--q", "4")
    assert code == 0
    assert report["command"] == "liouville claims"
    assert report["c_index"] == 12
    assert report["observed_value"] == "2"
    assert report["paper_radius_holds"] is False
    assert [2, 10, "2"] in report["counterexamples"]


def test_liouville_punchline(capsys, tmp_path):
    order = 2
    A = SeriesPoly([Series([3], order), Series([0, 1], order), Series([1, 1], order)])
    poly = write_json(tmp_path, "poly.json", codec.encode_poly(A))
    code, report = run_cli(capsys, "liouville", "punchline", "--poly", poly, "--p", "2", "--q", "10")
    assert code == 0
    assert report["result"] == "PASS"
    assert report["lhs"] == report["rhs"] == "2"

    code, _ = run_cli(capsys, "liouville", "punchline", "--p", "2", "--q", "10")
    assert code == 2


def test_classify(capsys, tmp_path):
    growth = write_json(tmp_path, "growth.json", {"type": "geometric", "log2r": "1"})
    code, report = run_cli(capsys, "classify", "--growth", growth, "--n-max", "100")
    assert code == 0
    assert report["label"] == "exponential"
    assert report["log2r_estimate"] == "1"
    assert report["heuristic"] is True


def test_witness(capsys, tmp_path):
    X = factorial_series(80)
    growth = write_json(tmp_path, "factorial.json", {"type": "from_series", "series": codec.encode_series(X)})
    code, report = run_cli(capsys, "witness", "--growth", growth, "--c", "2", "--d", "3", "--r", "2")
    assert code == 0
    n = report["witness"]
    assert n is not None and n <= 50

    geometric = write_json(tmp_path, "geometric.json", {"type": "geometric", "log2r": "1"})
    code, report = run_cli(capsys, "witness", "--growth", geometric, "--c", "1", "--d", "1", "--n-max", "60")
    assert code == 1
    assert report["witness"] is None


@pytest.mark.parametrize("argv", [
    [],
    ["gen", "--kind", "liouville"],
    ["gen", "--kind", "liouville", "--order", "8", "--bogus"],
    ["classify", "--growth", "g.json", "--n-max", "many"],
    ["criteria", "--growth", "g.json", "--rho", "r.json", "--n-range", "20:60", "--mode", "complex"],
    ["liouville", "--p", "3", "--q", "3"],
])
def test_usage_errors(capsys, argv):
    code = main(argv)
    report = json.loads(capsys.readouterr().out)
    assert code == 2
    assert report["status"] == "USAGE_ERROR"


@pytest.mark.parametrize("argv,command", [
    (["--help"], ""),
    (["criteria", "--help"], "criteria"),
    (["verify", "lemma1", "-h"], "verify lemma1"),
])
def test_help_is_a_report(capsys, argv, command):
    code, report = run_cli(capsys, *argv)
    assert code == 0
    assert report["status"] == "OK"
    assert report["command"] == command
    assert report["help"].startswith("usage:")


def test_criteria_negative_grid_bounds(capsys, superfactorial_files):
    growth, rho = superfactorial_files
    code, report = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho,
                           "--lambda-max", "-1", "--n-range", "20:60")
    assert code == 2
    assert report["status"] == "USAGE_ERROR"


def test_criteria_rejects_unbounded_table(capsys, tmp_path, superfactorial_files):
    _, rho = superfactorial_files
    growth = write_json(tmp_path, "table.json", {"type": "table", "log2": [["0", "0"], "+inf", ["1", "1"]]})
    code, report = run_cli(capsys, "criteria", "--growth", growth, "--rho", rho, "--n-range", "20:60")
    assert code == 3
    assert report["status"] == "DOMAIN_ERROR"


def test_domain_errors(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    code, report = run_cli(capsys, "verify", "lemma1", "--series", str(broken), "--m-max", "2")
    assert code == 3
    assert report["status"] == "DOMAIN_ERROR"

    code, _ = run_cli(capsys, "verify", "lemma1", "--series", str(tmp_path / "missing.json"), "--m-max", "2")
    assert code == 3

    short = write_json(tmp_path, "short.json", {"kind": "series", "order": 3, "coeffs": ["1", "2"]})
    code, _ = run_cli(capsys, "verify", "lemma1", "--series", short, "--m-max", "2")
    assert code == 3

    literal = write_json(tmp_path, "literal.json", {"kind": "series", "order": 1, "coeffs": ["1", "0.5"]})
    code, _ = run_cli(capsys, "verify", "lemma1", "--series", literal, "--m-max", "2")
    assert code == 3


def test_reports_are_deterministic(capsys, superfactorial_files):
    growth, rho = superfactorial_files
    argv = ["criteria", "--growth", growth, "--rho", rho, "--n-range", "20:30"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    second = capsys.readouterr().out
    assert first == second


if __name__ == "__main__":
    pytest.main([__file__])
