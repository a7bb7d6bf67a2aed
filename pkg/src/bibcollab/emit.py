"""CSV and JSON emitters.

CSV shows ratios at 2 decimals (half-up); JSON carries full precision.
Undefined values are empty cells in CSV and null in JSON. Every emitter
is deterministic: stable column orders, LF line endings, no timestamps.
Non-finite ratios cannot be encoded in JSON, so +inf becomes null and the
row's flag says why.
"""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import ROUND_HALF_UP, Decimal

from .boost import BoostReport
from .categories import CategoryStats
from .indicators import FirstAuthorSeries, ImpactSummary, YearSeries
from .ric import EXCLUSIVE_PARTNER, RicSeries


def round_half_up(value: float, places: int = 2) -> float:
    """Decimal half-up rounding (round() would round half to even)."""
    quantum = Decimal(1).scaleb(-places)
    return float(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def _cell(value: float | None, places: int = 2) -> str:
    if value is None:
        return ""
    if math.isinf(value):
        return "inf"
    return f"{round_half_up(value, places):.{places}f}"


def _finite_or_none(value: float | None) -> float | None:
    if value is None or math.isinf(value):
        return None
    return value


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _csv_writer() -> tuple[io.StringIO, csv.writer]:
    buffer = io.StringIO()
    return buffer, csv.writer(buffer, lineterminator="\n")


# -- year-wise shares -------------------------------------------------------

TIMESERIES_COLUMNS = (
    "year",
    "total",
    "indigenous",
    "icp",
    "bilateral",
    "indigenous_pct",
    "icp_pct",
    "bilateral_share_of_icp_pct",
)


def timeseries_csv(series: YearSeries) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(TIMESERIES_COLUMNS)
    for row in (*series.rows, series.totals):
        writer.writerow(
            [
                "Total" if row.year is None else row.year,
                row.total,
                row.indigenous,
                row.icp,
                row.bilateral,
                _cell(row.indigenous_pct),
                _cell(row.icp_pct),
                _cell(row.bilateral_share_of_icp_pct),
            ]
        )
    growth = series.cagr_summary()
    writer.writerow(
        [
            "CAGR",
            _cell(growth["total"]),
            _cell(growth["indigenous"]),
            _cell(growth["icp"]),
            _cell(growth["bilateral"]),
            "",
            "",
            "",
        ]
    )
    return buffer.getvalue()


def timeseries_json(series: YearSeries) -> str:
    def row_dict(row) -> dict:
        return {
            "year": row.year,
            "total": row.total,
            "indigenous": row.indigenous,
            "icp": row.icp,
            "bilateral": row.bilateral,
            "indigenous_pct": row.indigenous_pct,
            "icp_pct": row.icp_pct,
            "bilateral_share_of_icp_pct": row.bilateral_share_of_icp_pct,
        }

    return _dump_json(
        {
            "rows": [row_dict(r) for r in series.rows],
            "totals": row_dict(series.totals),
            "cagr_pct": series.cagr_summary(),
        }
    )


# -- citation impact --------------------------------------------------------

IMPACT_COLUMNS = ("class", "paper_count", "cited_count", "citation_sum", "cited_pct", "cpp")


def impact_csv(summary: ImpactSummary) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(IMPACT_COLUMNS)
    for row in summary.rows:
        writer.writerow(
            [row.label, row.paper_count, row.cited_count, row.citation_sum, _cell(row.cited_pct), _cell(row.cpp)]
        )
    return buffer.getvalue()


def impact_json(summary: ImpactSummary) -> str:
    return _dump_json(
        {
            "rows": [
                {
                    "class": row.label,
                    "paper_count": row.paper_count,
                    "cited_count": row.cited_count,
                    "citation_sum": row.citation_sum,
                    "cited_pct": row.cited_pct,
                    "cpp": row.cpp,
                }
                for row in summary.rows
            ]
        }
    )


# -- first-author share -----------------------------------------------------

FIRST_AUTHOR_COLUMNS = ("year", "resolved", "focal_first", "share_pct", "unresolved")


def first_author_csv(series: FirstAuthorSeries) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(FIRST_AUTHOR_COLUMNS)
    rows = (*series.rows, series.totals) if series.rows else ()
    for row in rows:
        writer.writerow(
            [
                "Total" if row.year is None else row.year,
                row.resolved,
                row.focal_first,
                _cell(row.share_pct),
                row.unresolved,
            ]
        )
    return buffer.getvalue()


def first_author_json(series: FirstAuthorSeries) -> str:
    def row_dict(row) -> dict:
        return {
            "year": row.year,
            "resolved": row.resolved,
            "focal_first": row.focal_first,
            "share_pct": row.share_pct,
            "unresolved": row.unresolved,
        }

    return _dump_json(
        {
            "rows": [row_dict(r) for r in series.rows],
            "totals": row_dict(series.totals) if series.rows else None,
        }
    )


# -- relative collaboration intensity ---------------------------------------

RIC_COLUMNS = ("year", "partner", "ric", "flag")


def ric_csv(series: RicSeries) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(RIC_COLUMNS)
    for point in series.points:
        writer.writerow([point.year, point.partner, _cell(point.value), point.flag or ""])
    return buffer.getvalue()


def ric_json(series: RicSeries) -> str:
    return _dump_json(
        {
            "focal": series.focal,
            "mode": series.mode,
            "points": [
                {
                    "year": point.year,
                    "partner": point.partner,
                    "ric": _finite_or_none(point.value),
                    "flag": point.flag,
                }
                for point in series.points
            ],
        }
    )


def ric_pairs_csv(rows: list[tuple[str, float | None, str | None]]) -> str:
    """Windowless table mode: one row per partner."""
    buffer, writer = _csv_writer()
    writer.writerow(("partner", "ric", "flag"))
    for partner, value, flag in rows:
        writer.writerow([partner, _cell(value), flag or ""])
    return buffer.getvalue()


def ric_pairs_json(focal: str, rows: list[tuple[str, float | None, str | None]]) -> str:
    return _dump_json(
        {
            "focal": focal,
            "pairs": [
                {"partner": partner, "ric": _finite_or_none(value), "flag": flag}
                for partner, value, flag in rows
            ],
        }
    )


# -- categories -------------------------------------------------------------


def top_categories_csv(top: list[tuple[str, int]]) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(("category", "papers"))
    writer.writerows(top)
    return buffer.getvalue()


def top_categories_json(top: list[tuple[str, int]]) -> str:
    return _dump_json({"categories": [{"category": c, "papers": n} for c, n in top]})


def category_breadth_csv(stats: CategoryStats) -> str:
    buffer, writer = _csv_writer()
    writer.writerow(("year", "distinct_categories"))
    writer.writerows(stats.breadth_by_year)
    return buffer.getvalue()


def category_breadth_json(stats: CategoryStats) -> str:
    return _dump_json(
        {
            "universe_size": stats.universe_size,
            "rows": [{"year": y, "distinct_categories": n} for y, n in stats.breadth_by_year],
        }
    )


# -- boost ------------------------------------------------------------------


def boost_json(report: BoostReport, focal: str | None = None, partner: str | None = None) -> str:
    inputs = report.inputs
    values = {
        "productivity_boost_pct": report.productivity_boost_pct,
        "citation_boost_pct": report.citation_boost_pct,
        "citedness_boost_pct": report.citedness_boost_pct,
        "impact_per_unit_productivity": report.impact_per_unit_productivity,
        "impact_per_unit_citedness": report.impact_per_unit_citedness,
    }
    payload = {
        "focal": focal,
        "partner": partner,
        "citedness_mode": report.citedness_mode,
        "inputs": {
            "indigenous_papers": inputs.indigenous_papers,
            "bilateral_papers": inputs.bilateral_papers,
            "combined_papers": inputs.combined_papers,
            "indigenous_citations": inputs.indigenous_citations,
            "bilateral_citations": inputs.bilateral_citations,
            "indigenous_cited": inputs.indigenous_cited,
            "bilateral_cited": inputs.bilateral_cited,
            "combined_cited": inputs.combined_cited,
        },
        "values": values,
        "display": {key: None if v is None else round_half_up(v) for key, v in values.items()},
        "reasons": {
            "citedness_boost_pct": report.citedness_reason,
            "impact_per_unit_productivity": report.impact_per_unit_productivity_reason,
            "impact_per_unit_citedness": report.impact_per_unit_citedness_reason,
        },
        "labels": report.labels,
    }
    return _dump_json(payload)
