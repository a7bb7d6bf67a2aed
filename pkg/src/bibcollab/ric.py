"""Relative intensity of collaboration between country pairs.

For a system of countries, ``C[x][y]`` counts papers on which x and y
both appear, ``C_x`` is the row total and ``T`` the sum over unordered
pairs. The intensity of x toward y is

    ric(x, y) = C_xy * (T - C_x) / (C_x * (C_y - C_xy))

which compares the pair's share of x's collaborations against the share
the rest of the system gives y. It is asymmetric: ric(x, y) and
ric(y, x) generally differ. Values above 1 mean x collaborates with y
more intensely than the system baseline.

All counts are integers and the final value is a single division, so
duplicating every record leaves results bit-identical.
"""

from __future__ import annotations

import csv
import math
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import kernels
from .errors import NoCollaborationsError
from .records import Corpus

EXCLUSIVE_PARTNER = "exclusive_partner"
NO_COLLABORATIONS = "no_collaborations"


@dataclass(frozen=True, eq=False)
class PairwiseCollabTable:
    """Symmetric pair-count matrix over an ordered country system."""

    countries: tuple[str, ...]
    counts: np.ndarray  # int64, shape (n, n)

    def __post_init__(self):
        n = len(self.countries)
        if len(set(self.countries)) != n:
            raise ValueError("countries must be unique")
        if self.counts.shape != (n, n):
            raise ValueError("counts shape must match the country list")
        if (self.counts < 0).any():
            raise ValueError("pair counts must be non-negative")
        if (np.diagonal(self.counts) != 0).any():
            raise ValueError("diagonal must be zero")
        if not (self.counts == self.counts.T).all():
            raise ValueError("pair counts must be symmetric")

    def index(self, country: str) -> int:
        try:
            return self.countries.index(country)
        except ValueError:
            raise KeyError(f"{country!r} is not in the country system") from None

    def pair_count(self, x: str, y: str) -> int:
        return int(self.counts[self.index(x), self.index(y)])

    def row_total(self, x: str) -> int:
        return int(self.counts[self.index(x)].sum())

    @property
    def total_pairs(self) -> int:
        return int(self.counts.sum()) // 2

    @classmethod
    def from_pairs(cls, countries: Sequence[str], pairs: dict[tuple[str, str], int]) -> "PairwiseCollabTable":
        """Build from unordered-pair counts, e.g. {("A", "B"): 2}."""
        order = tuple(countries)
        pos = {c: i for i, c in enumerate(order)}
        counts = np.zeros((len(order), len(order)), dtype=np.int64)
        for (x, y), value in pairs.items():
            counts[pos[x], pos[y]] += value
            counts[pos[y], pos[x]] += value
        return cls(countries=order, counts=counts)

    @classmethod
    def from_corpus(
        cls,
        corpus: Corpus,
        countries: Sequence[str],
        window: tuple[int, int] | None = None,
    ) -> "PairwiseCollabTable":
        """Count in-system pairs; a paper with k system countries adds k*(k-1)/2."""
        order = tuple(countries)
        if not order:
            raise ValueError("country system must be non-empty")
        arrays = corpus.arrays
        system_map = np.full(max(len(arrays.vocab), 1), -1, dtype=np.int32)
        for i, name in enumerate(order):
            vid = arrays.vocab.get(name)
            if vid is not None:
                system_map[vid] = i
        if window is None:
            counts = kernels.pair_matrix(arrays.offsets, arrays.country_ids, system_map, len(order))
        else:
            start, end = window
            per_year = kernels.pair_matrix_by_year(
                arrays.offsets, arrays.country_ids, arrays.years,
                start, end - start + 1, system_map, len(order),
            )
            counts = per_year.sum(axis=0)
        return cls(countries=order, counts=counts)

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["country", *self.countries])
            for i, name in enumerate(self.countries):
                writer.writerow([name, *(int(v) for v in self.counts[i])])

    @classmethod
    def from_csv(cls, path: str | Path) -> "PairwiseCollabTable":
        """Load an externally supplied table (matrix CSV written by to_csv)."""
        with open(path, encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if not header or header[0] != "country":
                raise ValueError("pair table must start with a 'country' header row")
            order = tuple(header[1:])
            rows = list(reader)
        if len(rows) != len(order):
            raise ValueError("pair table must be square")
        counts = np.zeros((len(order), len(order)), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != len(order) + 1:
                raise ValueError(f"row {i + 1} has {len(row) - 1} counts, expected {len(order)}")
            if row[0] != order[i]:
                raise ValueError(f"row {i + 1} is {row[0]!r}, expected {order[i]!r}")
            counts[i] = [int(v) for v in row[1:]]
        return cls(countries=order, counts=counts)


def ric(table: PairwiseCollabTable, x: str, y: str) -> float:
    """Relative intensity of collaboration of x toward y.

    Returns 0.0 when the pair never collaborates and +inf when y
    collaborates with nobody but x (zero denominator).
    """
    if x == y:
        raise ValueError("x and y must differ")
    c_xy = table.pair_count(x, y)
    c_x = table.row_total(x)
    c_y = table.row_total(y)
    if c_x == 0:
        raise NoCollaborationsError(f"{x!r} has no collaborations in the system")
    if c_xy == 0:
        return 0.0
    numerator = c_xy * (table.total_pairs - c_x)
    denominator = c_x * (c_y - c_xy)
    if denominator == 0:
        return math.inf
    return numerator / denominator


def ric_with_flag(table: PairwiseCollabTable, x: str, y: str) -> tuple[float | None, str | None]:
    """ric value plus a reason flag; undefined values come back as None."""
    try:
        value = ric(table, x, y)
    except NoCollaborationsError:
        return None, NO_COLLABORATIONS
    if math.isinf(value):
        return value, EXCLUSIVE_PARTNER
    return value, None


@dataclass(frozen=True)
class RicPoint:
    year: int
    partner: str
    value: float | None
    flag: str | None


@dataclass(frozen=True)
class RicSeries:
    focal: str
    mode: str
    points: tuple[RicPoint, ...]


def ric_series(
    corpus: Corpus,
    focal: str,
    partners: Sequence[str],
    year_start: int | None = None,
    year_end: int | None = None,
    mode: str = "yearly",
    system: Sequence[str] | None = None,
) -> RicSeries:
    """Per-year (or expanding-window cumulative) intensities for each partner.

    The country system defaults to focal plus the listed partners; pass an
    explicit superset to change the baseline.
    """
    if mode not in ("yearly", "cumulative"):
        raise ValueError(f"mode must be 'yearly' or 'cumulative', got {mode!r}")
    if not partners:
        raise ValueError("at least one partner is required")
    if focal in partners:
        raise ValueError("focal country cannot be its own partner")
    order = tuple(dict.fromkeys([focal, *partners] if system is None else system))
    missing = {focal, *partners} - set(order)
    if missing:
        raise ValueError(f"country system must contain focal and partners; missing {sorted(missing)}")

    arrays = corpus.arrays
    if year_start is None or year_end is None:
        if not len(corpus):
            return RicSeries(focal=focal, mode=mode, points=())
        year_start = int(arrays.years.min()) if year_start is None else year_start
        year_end = int(arrays.years.max()) if year_end is None else year_end
    n_years = year_end - year_start + 1
    if n_years < 1:
        raise ValueError("empty year window")

    system_map = np.full(max(len(arrays.vocab), 1), -1, dtype=np.int32)
    for i, name in enumerate(order):
        vid = arrays.vocab.get(name)
        if vid is not None:
            system_map[vid] = i
    per_year = kernels.pair_matrix_by_year(
        arrays.offsets, arrays.country_ids, arrays.years,
        year_start, n_years, system_map, len(order),
    )
    if mode == "cumulative":
        per_year = np.cumsum(per_year, axis=0)

    points: list[RicPoint] = []
    for t in range(n_years):
        table = PairwiseCollabTable(countries=order, counts=per_year[t])
        for partner in partners:
            value, flag = ric_with_flag(table, focal, partner)
            points.append(RicPoint(year=year_start + t, partner=partner, value=value, flag=flag))
    return RicSeries(focal=focal, mode=mode, points=tuple(points))
