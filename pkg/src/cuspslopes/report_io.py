"""Cusp-shape files and serialized analysis reports (JSON, schema v1).

Floats are written with 17 significant digits so every binary64 value
round-trips exactly; key order is fixed, so identical data produces
identical bytes.  Loading is strict: unknown versions, non-finite numbers
and internally inconsistent reports are rejected rather than coerced.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass

from . import __version__
from .bound_calculus import (
    BoundQuery,
    BoundReport,
    LemmaVerdict,
    is_prime,
    slope_count_bound,
    verify_counting_lemma,
)
from .cusp_geometry import CuspShape, DegenerateBasisError, Slope, area, intersection_number
from .slope_search import ShortSlopeReport, SlopeEntry, enumerate_short_slopes

CUSP_FILE_FORMAT = "cusp-file"
REPORT_FORMAT = "slope-analysis-report"
SCHEMA_VERSION = "v1"


class CuspFileError(ValueError):
    """File-level problem with a cusp-shape file."""


class ReportFormatError(ValueError):
    """Version mismatch or inconsistency in a serialized report."""


@dataclass(frozen=True)
class RecordError:
    """A rejected cusp record, addressed by position and name."""

    index: int
    name: str | None
    message: str

    def __str__(self) -> str:
        who = f"record {self.index}" + (f" ({self.name!r})" if self.name else "")
        return f"{who}: {self.message}"


# ------------------------------ JSON plumbing ------------------------------

def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    s = format(x, ".17g")
    if "." not in s and "e" not in s and "E" not in s:
        s += ".0"
    return s


def _dumps(value, indent: int = 0) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{inner}{json.dumps(str(k))}: {_dumps(v, indent + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        rendered = [_dumps(v, indent + 1) for v in value]
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            return "[" + ", ".join(rendered) + "]"
        return "[\n" + ",\n".join(inner + r for r in rendered) + f"\n{pad}]"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _reject_constant(token: str):
    raise ValueError(f"non-finite numeric literal {token!r} is not allowed")


def _parse_json(text: str, error_cls) -> dict:
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except ValueError as e:
        raise error_cls(f"not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise error_cls("top level must be a JSON object")
    return data


def _check_header(data: dict, expected_format: str, error_cls) -> None:
    fmt = data.get("format")
    if fmt != expected_format:
        raise error_cls(f"expected format {expected_format!r}, got {fmt!r}")
    version = data.get("version")
    if version != SCHEMA_VERSION:
        raise error_cls(
            f"incompatible {expected_format} version {version!r} "
            f"(this tool reads {SCHEMA_VERSION!r})"
        )


def _finite_number(value, what: str, error_cls) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise error_cls(f"{what} must be a number, got {value!r}")
    x = float(value)
    if not math.isfinite(x):
        raise error_cls(f"{what} must be finite, got {value!r}")
    return x


def _read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _write_text(path, text: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)


# ------------------------------- Cusp files --------------------------------

def _parse_vec(record: dict, key: str):
    v = record.get(key)
    if not (isinstance(v, list) and len(v) == 2):
        raise CuspFileError(f"{key} must be a pair [x, y]")
    return (
        _finite_number(v[0], f"{key}[0]", CuspFileError),
        _finite_number(v[1], f"{key}[1]", CuspFileError),
    )


def parse_cusp_records(data: dict) -> tuple[list[CuspShape], list[RecordError]]:
    """Validate parsed cusp-file JSON; bad records are collected, not fatal."""
    _check_header(data, CUSP_FILE_FORMAT, CuspFileError)
    records = data.get("cusps")
    if not isinstance(records, list):
        raise CuspFileError("missing 'cusps' list")
    shapes: list[CuspShape] = []
    errors: list[RecordError] = []
    seen_names: set[str] = set()
    for i, record in enumerate(records):
        name = record.get("name") if isinstance(record, dict) else None
        try:
            if not isinstance(record, dict):
                raise CuspFileError("record must be an object")
            if not isinstance(name, str) or not name:
                raise CuspFileError("missing or empty 'name'")
            if name in seen_names:
                raise CuspFileError(f"duplicate name {name!r}")
            mer = _parse_vec(record, "meridian")
            lon = _parse_vec(record, "longitude")
            shape = CuspShape(mer, lon, name=name)
        except (CuspFileError, DegenerateBasisError) as e:
            errors.append(RecordError(i, name if isinstance(name, str) else None, str(e)))
            continue
        seen_names.add(name)
        shapes.append(shape)
    return shapes, errors


def load_cusp_file(path) -> tuple[list[CuspShape], list[RecordError]]:
    """Load shapes from a cusp file ('-' reads stdin).

    File-level problems raise; per-record problems are returned alongside
    the records that did load.
    """
    return parse_cusp_records(_parse_json(_read_text(path), CuspFileError))


def save_cusp_file(shapes, path, *, sources: dict[str, str] | None = None) -> None:
    records = []
    for i, shape in enumerate(shapes):
        name = shape.name or f"cusp{i}"
        rec = {
            "name": name,
            "meridian": list(shape.meridian),
            "longitude": list(shape.longitude),
        }
        if sources and name in sources:
            rec["source"] = sources[name]
        records.append(rec)
    data = {"format": CUSP_FILE_FORMAT, "version": SCHEMA_VERSION, "cusps": records}
    _write_text(path, _dumps(data) + "\n")


def find_shape(shapes, name: str) -> CuspShape:
    for shape in shapes:
        if shape.name == name:
            return shape
    known = ", ".join(sorted(s.name or "?" for s in shapes)) or "none"
    raise CuspFileError(f"no cusp named {name!r} (available: {known})")


# ----------------------------- Analysis reports ----------------------------

@dataclass(frozen=True)
class AnalysisReport:
    """One shape's full analysis: short slopes, crossing data, count bound,
    and the finite-field injectivity verdict."""

    shape_name: str
    threshold: float
    entries: tuple[SlopeEntry, ...]
    delta_matrix: tuple[tuple[int, ...], ...]
    max_delta: int
    bound: BoundReport
    lemma: LemmaVerdict
    tool_version: str = __version__
    timestamp: str | None = None


def build_analysis_report(
    shape: CuspShape,
    threshold: float,
    *,
    area_floor: float | None = None,
    prime: int | None = None,
    timestamp: str | None = None,
) -> AnalysisReport:
    """Run the enumeration and bound pipeline for one shape.

    The area floor defaults to the shape's own torus area; pass an explicit
    census floor to reproduce shape-independent bounds.
    """
    short = enumerate_short_slopes(shape, threshold)
    bound = slope_count_bound(BoundQuery(threshold, area_floor if area_floor is not None else area(shape)))
    lemma = verify_counting_lemma(short.slopes, prime if prime is not None else bound.prime)
    return AnalysisReport(
        shape_name=shape.name or "unnamed",
        threshold=float(threshold),
        entries=short.entries,
        delta_matrix=short.delta_matrix,
        max_delta=short.max_delta,
        bound=bound,
        lemma=lemma,
        timestamp=timestamp,
    )


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "format": REPORT_FORMAT,
        "version": SCHEMA_VERSION,
        "tool_version": report.tool_version,
        "timestamp": report.timestamp,
        "shape_name": report.shape_name,
        "threshold": report.threshold,
        "slopes": [
            {"a": e.slope.a, "b": e.slope.b, "length": e.length, "boundary": e.boundary}
            for e in report.entries
        ],
        "delta_matrix": [list(row) for row in report.delta_matrix],
        "max_delta": report.max_delta,
        "bound": {
            "length_threshold": report.bound.query.length_threshold,
            "area_floor": report.bound.query.area_floor,
            "delta_max": report.bound.delta_max,
            "prime": report.bound.prime,
            "count_bound": report.bound.count_bound,
            "floor_guard_hit": report.bound.floor_guard_hit,
        },
        "lemma": {
            "prime": report.lemma.prime,
            "injective": report.lemma.injective,
            "collision": (
                None
                if report.lemma.collision is None
                else [[s.a, s.b] for s in report.lemma.collision]
            ),
            "delta": report.lemma.delta,
        },
    }


def report_to_json(report: AnalysisReport) -> str:
    return _dumps(report_to_dict(report)) + "\n"


def save_report(report: AnalysisReport, path) -> None:
    _write_text(path, report_to_json(report))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ReportFormatError(message)


def report_from_dict(data: dict) -> AnalysisReport:
    """Reconstruct and cross-check a report; inconsistent data is rejected."""
    _check_header(data, REPORT_FORMAT, ReportFormatError)
    _require(isinstance(data.get("shape_name"), str), "missing shape_name")
    threshold = _finite_number(data.get("threshold"), "threshold", ReportFormatError)

    raw_slopes = data.get("slopes")
    _require(isinstance(raw_slopes, list), "missing 'slopes' list")
    entries = []
    for rec in raw_slopes:
        _require(isinstance(rec, dict), "slope records must be objects")
        _require(
            isinstance(rec.get("a"), int) and isinstance(rec.get("b"), int),
            "slope coordinates must be integers",
        )
        length = _finite_number(rec.get("length"), "slope length", ReportFormatError)
        boundary = rec.get("boundary", False)
        _require(isinstance(boundary, bool), "boundary flag must be a boolean")
        entries.append(SlopeEntry(Slope(rec["a"], rec["b"]), length, boundary))

    slopes = [e.slope for e in entries]
    matrix = data.get("delta_matrix")
    _require(
        isinstance(matrix, list)
        and all(
            isinstance(row, list)
            and all(isinstance(d, int) and not isinstance(d, bool) for d in row)
            for row in matrix
        ),
        "delta_matrix must be a matrix of integers",
    )
    expected = [
        [intersection_number(s1, s2) for s2 in slopes] for s1 in slopes
    ]
    _require(matrix == expected, "delta_matrix does not match the slope list")
    max_delta = max((d for row in expected for d in row), default=0)
    _require(data.get("max_delta") == max_delta, "max_delta does not match delta_matrix")

    raw_bound = data.get("bound")
    _require(isinstance(raw_bound, dict), "missing bound section")
    query = BoundQuery(
        _finite_number(raw_bound.get("length_threshold"), "bound length", ReportFormatError),
        _finite_number(raw_bound.get("area_floor"), "bound area", ReportFormatError),
    )
    recomputed = slope_count_bound(query)
    bound = BoundReport(
        query,
        recomputed.delta_max,
        recomputed.prime,
        recomputed.count_bound,
        recomputed.floor_guard_hit,
    )
    for key in ("delta_max", "prime", "count_bound"):
        _require(
            raw_bound.get(key) == getattr(bound, key),
            f"bound section is inconsistent at {key!r}",
        )

    raw_lemma = data.get("lemma")
    _require(isinstance(raw_lemma, dict), "missing lemma section")
    prime = raw_lemma.get("prime")
    _require(isinstance(prime, int) and not isinstance(prime, bool), "lemma prime must be an integer")
    _require(is_prime(prime), f"lemma modulus {prime} is not prime")
    lemma = verify_counting_lemma(slopes, prime)
    _require(
        raw_lemma.get("injective") == lemma.injective,
        "lemma verdict does not match recomputation",
    )

    timestamp = data.get("timestamp")
    _require(
        timestamp is None or isinstance(timestamp, str), "timestamp must be a string"
    )
    tool_version = data.get("tool_version")
    _require(isinstance(tool_version, str), "missing tool_version")

    return AnalysisReport(
        shape_name=data["shape_name"],
        threshold=threshold,
        entries=tuple(entries),
        delta_matrix=tuple(tuple(row) for row in expected),
        max_delta=max_delta,
        bound=bound,
        lemma=lemma,
        tool_version=tool_version,
        timestamp=timestamp,
    )


def load_report(path) -> AnalysisReport:
    return report_from_dict(_parse_json(_read_text(path), ReportFormatError))
