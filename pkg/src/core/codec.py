"""
JSON documents for series, polynomials, growth laws and reports.

Rationals travel as strings ("p", "-p", "p/q"); log2 intervals as a pair of
rational strings or one of "-inf" / "+inf". Decoding failures of any kind
surface as DomainError.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, List, Tuple

from core.constructions import GapClaimReport, PunchlineReport
from core.decomp import DecompComponents, RegionTally
from core.errors import DomainError, UsageError
from core.exactnum import NEG_INFINITY, POS_INFINITY, AbsValue, LogMagInterval
from core.growth import (
    CriteriaReport,
    FactorialExponentGrowth,
    FactorialRho,
    GeometricGrowth,
    GeometricRho,
    GrowthClass,
    GrowthSpec,
    OneRho,
    PolynomialRho,
    Prop1Report,
    RhoSpec,
    SeriesGrowth,
    TableGrowth,
    TableRho,
)
from core.series import Series, SeriesPoly
from utils.helpers import format_rational, parse_rational

Document = Dict[str, Any]


def _require(doc: Any, key: str, what: str) -> Any:
    if not isinstance(doc, dict):
        raise DomainError(f"{what} must be a JSON object, got {type(doc).__name__}")
    if key not in doc:
        raise DomainError(f"{what} is missing the field {key!r}")
    return doc[key]


def _check_kind(doc: Any, kind: str) -> None:
    """The "kind" tag is optional on input but must match when present"""
    if isinstance(doc, dict) and "kind" in doc and doc["kind"] != kind:
        raise DomainError(f"expected a {kind!r} document, got kind {doc['kind']!r}")


def _integer(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{what} must be an integer, got {value!r}")
    return value


def _decoding(what: str, build: Callable[[], Any]) -> Any:
    # constructor-level usage errors on decoded data are bad input, not bad flags
    try:
        return build()
    except UsageError as e:
        raise DomainError(f"invalid {what}: {e}") from e


def encode_series(X: Series) -> Document:
    return {
        "kind": "series",
        "order": X.order,
        "coeffs": [format_rational(c) for c in X.coeffs],
    }


def decode_series(doc: Any) -> Series:
    _check_kind(doc, "series")
    order = _integer(_require(doc, "order", "series"), "series order")
    coeffs = _require(doc, "coeffs", "series")
    if not isinstance(coeffs, list):
        raise DomainError("series coeffs must be a list")
    if order < 0 or len(coeffs) != order + 1:
        raise DomainError(f"series of order {order} needs exactly {order + 1} coefficients, got {len(coeffs)}")
    return Series([parse_rational(c) for c in coeffs], order)


def encode_poly(A: SeriesPoly) -> Document:
    return {"kind": "poly", "coeffs": [encode_series(c) for c in A.coeffs]}


def decode_poly(doc: Any) -> SeriesPoly:
    _check_kind(doc, "poly")
    coeffs = _require(doc, "coeffs", "poly")
    if not isinstance(coeffs, list) or not coeffs:
        raise DomainError("poly coeffs must be a nonempty list of series")
    series = [decode_series(c) for c in coeffs]
    return _decoding("poly", lambda: SeriesPoly(series))


def encode_abs(value: AbsValue) -> Document:
    if value.is_nonarchimedean:
        return {"type": "padic", "p": value.p}
    return {"type": "archimedean"}


def decode_abs(doc: Any) -> AbsValue:
    kind = _require(doc, "type", "absolute value")
    if kind == "archimedean":
        return AbsValue.archimedean()
    if kind == "padic":
        return AbsValue.padic(_integer(_require(doc, "p", "p-adic absolute value"), "prime"))
    raise DomainError(f"unknown absolute value type {kind!r}")


def parse_abs_label(text: str) -> AbsValue:
    """CLI form: "archimedean" or "padic:P" """
    if text == "archimedean":
        return AbsValue.archimedean()
    if text.startswith("padic:"):
        try:
            p = int(text.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"expected padic:P with an integer P, got {text!r}")
        return AbsValue.padic(p)
    raise UsageError(f"absolute value must be 'archimedean' or 'padic:P', got {text!r}")


def encode_interval(interval: LogMagInterval) -> Any:
    if interval.is_neg_infinity:
        return "-inf"
    if interval.is_pos_infinity:
        return "+inf"
    return [format_rational(interval.lo), format_rational(interval.hi)]


def decode_interval(doc: Any) -> LogMagInterval:
    if doc == "-inf":
        return NEG_INFINITY
    if doc == "+inf":
        return POS_INFINITY
    if not isinstance(doc, list) or len(doc) != 2:
        raise DomainError(f"a log2 interval is [lo, hi] or '-inf', got {doc!r}")
    lo, hi = parse_rational(doc[0]), parse_rational(doc[1])
    if lo > hi:
        raise DomainError(f"empty log2 interval [{lo}, {hi}]")
    return LogMagInterval(lo, hi)


def _decode_table(doc: Any, what: str) -> Tuple[LogMagInterval, ...]:
    entries = _require(doc, "log2", what)
    if not isinstance(entries, list) or not entries:
        raise DomainError(f"{what} needs a nonempty log2 list")
    intervals = tuple(decode_interval(e) for e in entries)
    if any(iv.is_pos_infinity for iv in intervals):
        raise DomainError(f"{what} log2 entries cannot be +inf")
    return intervals


def encode_growth(spec: GrowthSpec) -> Document:
    doc: Document = {"kind": "growth", "abs": encode_abs(spec.abs_value)}
    if isinstance(spec, FactorialExponentGrowth):
        doc.update(type="factorial_exponent", a=format_rational(spec.a),
                   b=format_rational(spec.b), c=format_rational(spec.c))
    elif isinstance(spec, GeometricGrowth):
        doc.update(type="geometric", log2r=format_rational(spec.log2r))
    elif isinstance(spec, TableGrowth):
        doc.update(type="table", log2=[encode_interval(iv) for iv in spec.intervals])
    elif isinstance(spec, SeriesGrowth):
        doc.update(type="from_series", series=encode_series(spec.series))
    else:
        raise DomainError(f"cannot encode growth law {type(spec).__name__}")
    return doc


def decode_growth(doc: Any) -> GrowthSpec:
    _check_kind(doc, "growth")
    kind = _require(doc, "type", "growth law")
    abs_value = decode_abs(doc["abs"]) if "abs" in doc else AbsValue.archimedean()
    if kind == "factorial_exponent":
        return FactorialExponentGrowth(
            a=parse_rational(_require(doc, "a", "growth law")),
            b=parse_rational(doc.get("b", "0")),
            c=parse_rational(doc.get("c", "0")),
            abs_value=abs_value,
        )
    if kind == "geometric":
        return GeometricGrowth(parse_rational(_require(doc, "log2r", "growth law")), abs_value)
    if kind == "table":
        return TableGrowth(_decode_table(doc, "growth table"), abs_value)
    if kind == "from_series":
        return SeriesGrowth(decode_series(_require(doc, "series", "growth law")), abs_value)
    raise DomainError(f"unknown growth law type {kind!r}")


def encode_rho(rho: RhoSpec) -> Document:
    doc: Document = {"kind": "rho"}
    if isinstance(rho, FactorialRho):
        doc["type"] = "factorial"
    elif isinstance(rho, GeometricRho):
        doc.update(type="geometric", r=format_rational(rho.r))
    elif isinstance(rho, PolynomialRho):
        doc.update(type="polynomial", degree=rho.degree)
    elif isinstance(rho, TableRho):
        doc.update(type="table", log2=[encode_interval(iv) for iv in rho.intervals])
    elif isinstance(rho, OneRho):
        doc["type"] = "one"
    else:
        raise DomainError(f"cannot encode rho {type(rho).__name__}")
    return doc


def decode_rho(doc: Any) -> RhoSpec:
    _check_kind(doc, "rho")
    kind = _require(doc, "type", "rho")
    if kind == "factorial":
        return FactorialRho()
    if kind == "geometric":
        return GeometricRho(parse_rational(_require(doc, "r", "rho")))
    if kind == "polynomial":
        return PolynomialRho(_integer(_require(doc, "degree", "rho"), "rho degree"))
    if kind == "table":
        return TableRho(_decode_table(doc, "rho table"))
    if kind == "one":
        return OneRho()
    raise DomainError(f"unknown rho type {kind!r}")


def encode_components(components: DecompComponents) -> Document:
    return {
        "n": components.n,
        "lambda": components.lam,
        "head": format_rational(components.head),
        "gamma": format_rational(components.gamma),
        "delta": format_rational(components.delta),
        "epsilon": format_rational(components.epsilon),
        "alpha_n": format_rational(components.alpha_n),
        "identity_ok": components.identity_ok,
    }


def encode_tally(tally: RegionTally) -> Document:
    return {
        "n": tally.n,
        "lambda": tally.lam,
        "monomials": tally.monomials,
        "regions": {
            name: {"count": region.count, "sum": format_rational(region.total)}
            for name, region in tally.regions.items()
        },
    }


def encode_criteria(report: CriteriaReport) -> Document:
    entries: List[Document] = []
    for entry in report.entries:
        entries.append({
            "kind": entry.kind.value,
            "lambda": entry.lam,
            "m": entry.m,
            "verdict": entry.verdict.value,
            "margins": [[n, encode_interval(mg)] for n, mg in entry.margins],
        })
    return {
        "mode": report.mode,
        "n_range": list(report.n_range),
        "lambda_max": report.lambda_max,
        "m_max": report.m_max,
        "x0_log2": encode_interval(report.x0_log),
        "precondition_x0": report.precondition_x0,
        "verdicts": [
            {"lambda": lam, "m": m, "verdict": verdict.value}
            for (lam, m), verdict in sorted(report.verdicts.items())
        ],
        "margin_tables": entries,
        "empirical": True,
    }


def encode_prop1(report: Prop1Report) -> Document:
    doc: Document = {
        "result": report.status,
        "order": report.order,
        "c": format_rational(report.c),
        "d": format_rational(report.d),
        "r": format_rational(report.r),
        "abs": report.abs_label,
        "first_violation": report.first_violation,
    }
    if report.premise_violations:
        doc["premise_violations"] = report.premise_violations
    return doc


def encode_growth_class(result: GrowthClass) -> Document:
    return {
        "label": result.label,
        "log2r_estimate": None if result.estimate is None else format_rational(result.estimate),
        "window": list(result.window),
        "tau": format_rational(result.tau),
        "heuristic": result.heuristic,
    }


def encode_gap_claims(report: GapClaimReport) -> Document:
    return {
        "p": report.p,
        "q": report.q,
        "c_index": report.c_index,
        "dmax": report.d_max,
        "order": report.order,
        "coeff_at_c": {str(j): format_rational(v) for j, v in report.coeff_at_c.items()},
        "observed_value": format_rational(report.observed_value),
        "expected_value": report.expected_value,
        "claimed_value": report.claimed_value,
        "oracle_count": report.oracle_count,
        "value_matches_oracle": report.value_matches_oracle,
        "lower_powers_vanish": report.lower_powers_vanish,
        "zero_window_radius_verified": report.zero_window_radius_verified,
        "claimed_radius": report.claimed_radius,
        "paper_radius_holds": report.paper_radius_holds,
        "counterexamples": [[j, n, format_rational(v)] for j, n, v in report.counterexamples],
        "counterexample_total": report.counterexample_total,
        "support_nesting_exceptions": report.support_nesting_exceptions,
    }


def encode_punchline(report: PunchlineReport) -> Document:
    def rational_or_none(value: Any) -> Any:
        return None if value is None else format_rational(Fraction(value))

    return {
        "p": report.p,
        "q": report.q,
        "c_index": report.c_index,
        "n": report.n,
        "d": report.d,
        "required_radius": report.required_radius,
        "verified_radius": report.verified_radius,
        "result": report.status,
        "lhs": rational_or_none(report.lhs),
        "rhs": rational_or_none(report.rhs),
        "equal": report.equal,
        "nonzero": report.nonzero,
        "required_q": report.required_q,
    }
