"""Year-wise output/collaboration shares, growth rates and citation impact.

All percentages are kept at full precision here; 2-decimal half-up
rounding is applied only by the emitters. Undefined ratios (zero
denominators) are represented as None, never as NaN.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import kernels
from .errors import NonPositivePeriodsError, ZeroBaseError
from .records import Corpus, corpus_labels


def cagr(first: float, last: float, periods: int) -> float:
    """Compound annual growth rate, in percent.

    ``periods`` is the number of year steps between the endpoints
    (last_year - first_year), so a 1990..2020 series uses 30.
    """
    if periods < 1:
        raise NonPositivePeriodsError(f"periods must be >= 1, got {periods}")
    if first <= 0:
        raise ZeroBaseError(f"first value must be > 0, got {first}")
    return 100.0 * ((last / first) ** (1.0 / periods) - 1.0)


@dataclass(frozen=True)
class YearRow:
    """Counts for one year (or the totals row, year=None)."""

    year: int | None
    total: int
    indigenous: int
    icp: int
    bilateral: int

    def __post_init__(self):
        if self.indigenous + self.icp != self.total:
            raise ValueError("indigenous + icp must equal total")
        if self.bilateral > self.icp:
            raise ValueError("bilateral count cannot exceed icp count")

    @property
    def indigenous_pct(self) -> float | None:
        return 100.0 * self.indigenous / self.total if self.total else None

    @property
    def icp_pct(self) -> float | None:
        return 100.0 * self.icp / self.total if self.total else None

    @property
    def bilateral_share_of_icp_pct(self) -> float | None:
        return 100.0 * self.bilateral / self.icp if self.icp else None


_SERIES_NAMES = ("total", "indigenous", "icp", "bilateral")


@dataclass(frozen=True)
class YearSeries:
    """Per-year rows sorted by year, plus derived totals and growth rates."""

    rows: tuple[YearRow, ...]

    def __post_init__(self):
        years = [r.year for r in self.rows]
        if any(y is None for y in years) or sorted(set(years)) != years:
            raise ValueError("rows must carry unique, sorted, non-null years")

    @classmethod
    def from_counts(cls, counts: dict[int, tuple[int, int, int, int]]) -> "YearSeries":
        """Build from {year: (total, indigenous, icp, bilateral)}."""
        rows = tuple(
            YearRow(year, *counts[year]) for year in sorted(counts)
        )
        return cls(rows=rows)

    @cached_property
    def totals(self) -> YearRow:
        return YearRow(
            year=None,
            total=sum(r.total for r in self.rows),
            indigenous=sum(r.indigenous for r in self.rows),
            icp=sum(r.icp for r in self.rows),
            bilateral=sum(r.bilateral for r in self.rows),
        )

    def cagr_summary(self) -> dict[str, float | None]:
        """CAGR per count series over the full span; None when undefined."""
        out: dict[str, float | None] = {}
        if len(self.rows) < 2:
            return {name: None for name in _SERIES_NAMES}
        first, last = self.rows[0], self.rows[-1]
        periods = last.year - first.year
        for name in _SERIES_NAMES:
            try:
                out[name] = cagr(getattr(first, name), getattr(last, name), periods)
            except ZeroBaseError:
                out[name] = None
        return out


def year_series(corpus: Corpus, focal: str, partner: str) -> YearSeries:
    """Classify the corpus and tabulate counts for every year in its span."""
    if not len(corpus):
        return YearSeries(rows=())
    labels = corpus_labels(corpus, focal, partner)
    years = corpus.arrays.years
    y0 = int(years.min())
    n = int(years.max()) - y0 + 1
    idx = years - y0
    total = np.bincount(idx, minlength=n)
    indigenous = np.bincount(idx[labels == kernels.INDIGENOUS], minlength=n)
    bilateral = np.bincount(idx[labels == kernels.BILATERAL], minlength=n)
    other = np.bincount(idx[labels == kernels.OTHER], minlength=n)
    rows = tuple(
        YearRow(
            year=y0 + i,
            total=int(total[i]),
            indigenous=int(indigenous[i]),
            icp=int(bilateral[i] + other[i]),
            bilateral=int(bilateral[i]),
        )
        for i in range(n)
    )
    return YearSeries(rows=rows)


@dataclass(frozen=True)
class ImpactRow:
    """Citation impact for one record class."""

    label: str
    paper_count: int
    cited_count: int
    citation_sum: int

    def __post_init__(self):
        if self.cited_count > self.paper_count:
            raise ValueError("cited_count cannot exceed paper_count")

    @property
    def cited_pct(self) -> float | None:
        return 100.0 * self.cited_count / self.paper_count if self.paper_count else None

    @property
    def cpp(self) -> float | None:
        return self.citation_sum / self.paper_count if self.paper_count else None

    @classmethod
    def from_totals(cls, label: str, paper_count: int, citation_sum: int, cited_count: int) -> "ImpactRow":
        return cls(label=label, paper_count=paper_count, cited_count=cited_count, citation_sum=citation_sum)


IMPACT_CLASSES = ("TP", "NonICP", "ICP", "Bilateral")


@dataclass(frozen=True)
class ImpactSummary:
    """TP, NonICP, ICP and Bilateral impact rows (TP = NonICP + ICP exactly)."""

    rows: tuple[ImpactRow, ...]

    def __post_init__(self):
        if tuple(r.label for r in self.rows) != IMPACT_CLASSES:
            raise ValueError(f"rows must be {IMPACT_CLASSES} in order")
        tp, non_icp, icp, bilateral = self.rows
        if (
            tp.paper_count != non_icp.paper_count + icp.paper_count
            or tp.citation_sum != non_icp.citation_sum + icp.citation_sum
            or tp.cited_count != non_icp.cited_count + icp.cited_count
        ):
            raise ValueError("TP row must equal NonICP + ICP exactly")
        if bilateral.paper_count > icp.paper_count:
            raise ValueError("Bilateral class must be a subset of ICP")

    def row(self, label: str) -> ImpactRow:
        for r in self.rows:
            if r.label == label:
                return r
        raise KeyError(label)


def impact_summary(corpus: Corpus, focal: str, partner: str) -> ImpactSummary:
    labels = corpus_labels(corpus, focal, partner)
    cited = corpus.arrays.times_cited

    def row(label: str, mask: np.ndarray) -> ImpactRow:
        sub = cited[mask]
        return ImpactRow(
            label=label,
            paper_count=int(mask.sum()),
            cited_count=int((sub > 0).sum()),
            citation_sum=int(sub.sum()),
        )

    every = np.ones(len(labels), dtype=bool)
    return ImpactSummary(
        rows=(
            row("TP", every),
            row("NonICP", labels == kernels.INDIGENOUS),
            row("ICP", labels != kernels.INDIGENOUS),
            row("Bilateral", labels == kernels.BILATERAL),
        )
    )


@dataclass(frozen=True)
class FirstAuthorRow:
    """First-author attribution among bilateral records for one year."""

    year: int | None
    resolved: int
    focal_first: int
    unresolved: int

    @property
    def share_pct(self) -> float | None:
        return 100.0 * self.focal_first / self.resolved if self.resolved else None


@dataclass(frozen=True)
class FirstAuthorSeries:
    rows: tuple[FirstAuthorRow, ...]

    @cached_property
    def totals(self) -> FirstAuthorRow:
        return FirstAuthorRow(
            year=None,
            resolved=sum(r.resolved for r in self.rows),
            focal_first=sum(r.focal_first for r in self.rows),
            unresolved=sum(r.unresolved for r in self.rows),
        )


def first_author_share(corpus: Corpus, focal: str, partner: str) -> FirstAuthorSeries:
    """Share of bilateral records whose first author is from the focal country.

    Records without a resolved first-author country are excluded from both
    numerator and denominator and reported per year as ``unresolved``.
    """
    if not len(corpus):
        return FirstAuthorSeries(rows=())
    labels = corpus_labels(corpus, focal, partner)
    arrays = corpus.arrays
    years = arrays.years
    bilateral = labels == kernels.BILATERAL
    resolved = bilateral & (arrays.first_author_ids >= 0)
    focal_id = arrays.vocab.get(focal, -1)
    focal_first = resolved & (arrays.first_author_ids == focal_id)

    y0 = int(years.min())
    n = int(years.max()) - y0 + 1
    idx = years - y0
    resolved_n = np.bincount(idx[resolved], minlength=n)
    focal_n = np.bincount(idx[focal_first], minlength=n)
    unresolved_n = np.bincount(idx[bilateral & ~resolved], minlength=n)
    rows = tuple(
        FirstAuthorRow(
            year=y0 + i,
            resolved=int(resolved_n[i]),
            focal_first=int(focal_n[i]),
            unresolved=int(unresolved_n[i]),
        )
        for i in range(n)
    )
    return FirstAuthorSeries(rows=rows)
