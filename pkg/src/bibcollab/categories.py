"""Subject-category analytics over the bilateral record set.

Category strings are used verbatim after trimming; no canonical
dictionary is enforced because the category scheme has drifted over the
years. A record carrying several categories counts once in each, so
column sums may exceed the bilateral paper count.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Collection, Mapping
from dataclasses import dataclass

from . import kernels
from .records import Corpus, corpus_labels

DEFAULT_UNIVERSE_SIZE = 252


@dataclass(frozen=True)
class CategoryStats:
    """Per-year breadth and overall volume of bilateral categories."""

    breadth_by_year: tuple[tuple[int, int], ...]
    category_counts: Mapping[str, int]
    universe_size: int = DEFAULT_UNIVERSE_SIZE
    unknown_categories: Mapping[str, int] | None = None

    def __post_init__(self):
        if self.unknown_categories is not None:
            for _, count in self.breadth_by_year:
                if count > self.universe_size:
                    raise ValueError("distinct count exceeds the supplied universe")

    def top(self, k: int) -> list[tuple[str, int]]:
        """k highest-volume categories, ties broken by name ascending."""
        if k < 1:
            raise ValueError("k must be >= 1")
        ordered = sorted(self.category_counts.items(), key=lambda item: (-item[1], item[0]))
        return ordered[:k]


def category_stats(
    corpus: Corpus,
    focal: str,
    partner: str,
    universe: Collection[str] | None = None,
) -> CategoryStats:
    """Tabulate bilateral categories.

    With a ``universe`` of known category names, categories outside it are
    excluded from the breadth counts and reported in
    ``unknown_categories``; otherwise strings count verbatim.
    """
    labels = corpus_labels(corpus, focal, partner)
    known = frozenset(universe) if universe is not None else None

    per_year: dict[int, set[str]] = {}
    counts: Counter[str] = Counter()
    unknown: Counter[str] = Counter()
    for record, label in zip(corpus.records, labels):
        if label != kernels.BILATERAL:
            continue
        counts.update(record.categories)
        bucket = per_year.setdefault(record.year, set())
        for category in record.categories:
            if known is not None and category not in known:
                unknown[category] += 1
            else:
                bucket.add(category)

    if per_year:
        y0, y1 = min(per_year), max(per_year)
        breadth = tuple((y, len(per_year.get(y, ()))) for y in range(y0, y1 + 1))
    else:
        breadth = ()
    return CategoryStats(
        breadth_by_year=breadth,
        category_counts=dict(sorted(counts.items())),
        universe_size=len(known) if known is not None else DEFAULT_UNIVERSE_SIZE,
        unknown_categories=dict(sorted(unknown.items())) if known is not None else None,
    )


def category_breadth(corpus: Corpus, focal: str, partner: str) -> tuple[tuple[int, int], ...]:
    """Distinct categories on at least one bilateral record, per year."""
    return category_stats(corpus, focal, partner).breadth_by_year


def top_categories(corpus: Corpus, focal: str, partner: str, k: int) -> list[tuple[str, int]]:
    """k highest-volume bilateral categories (count desc, then name asc)."""
    return category_stats(corpus, focal, partner).top(k)
