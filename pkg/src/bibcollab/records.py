"""Normalized publication records, corpora and the three-way classification.

A record is classified relative to a (focal, partner) country pair:

* ``Indigenous`` -- every affiliation is from the focal country,
* ``BilateralPartner`` -- the partner country co-occurs with the focal one,
* ``OtherInternational`` -- at least one foreign country, none of them the
  partner.

Bilateral records are by definition a subset of the internationally
collaborated aggregate (indigenous + international = whole corpus).
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import FocalAbsentError


class DocType(enum.Enum):
    ARTICLE = "Article"
    REVIEW = "Review"
    OTHER = "Other"

    @classmethod
    def from_wos(cls, raw: str) -> "DocType":
        # DT may carry compound values ("Article; Proceedings Paper").
        tokens = {part.strip().casefold() for part in raw.split(";")}
        if "article" in tokens:
            return cls.ARTICLE
        if "review" in tokens:
            return cls.REVIEW
        return cls.OTHER


class Label(enum.Enum):
    INDIGENOUS = "Indigenous"
    BILATERAL_PARTNER = "BilateralPartner"
    OTHER_INTERNATIONAL = "OtherInternational"


def _fold(token: str) -> str:
    return token.strip().rstrip(".").strip().casefold()


class CountryMap:
    """Alias map from raw affiliation country tokens to canonical names.

    Lookup is case-insensitive after trimming whitespace and trailing
    periods. Unknown tokens pass through verbatim (trimmed) and are tallied
    in :attr:`unmapped` so a run can be audited for token drift. The map is
    single-writer: build it, then share it read-only.
    """

    def __init__(self, aliases: Mapping[str, str] | None = None):
        self._aliases: dict[str, str] = {}
        self.unmapped: Counter[str] = Counter()
        if aliases:
            for raw, canonical in aliases.items():
                self.add(raw, canonical)

    def add(self, raw: str, canonical: str) -> None:
        self._aliases[_fold(raw)] = canonical.strip()

    def normalize(self, raw: str) -> str:
        token = raw.strip().rstrip(".").strip()
        hit = self._aliases.get(token.casefold())
        if hit is not None:
            return hit
        if token:
            self.unmapped[token] += 1
        return token

    def __len__(self) -> int:
        return len(self._aliases)

    @classmethod
    def from_file(cls, path: str | Path) -> "CountryMap":
        """Load ``raw=canonical`` pairs; blank lines and ``#`` comments ignored."""
        cmap = cls()
        with open(path, encoding="utf-8") as handle:
            cmap._load(handle)
        return cmap

    @classmethod
    def default(cls) -> "CountryMap":
        """The alias map shipped with the package."""
        cmap = cls()
        text = resources.files("bibcollab").joinpath("data/country_aliases.txt").read_text("utf-8")
        cmap._load(text.splitlines())
        return cmap

    def _load(self, lines) -> None:
        for line in lines:
            entry = line.split("#", 1)[0].strip()
            if not entry:
                continue
            raw, _, canonical = entry.partition("=")
            if canonical:
                self.add(raw, canonical)


def normalize_country(raw: str, country_map: CountryMap | None = None) -> str:
    """Canonicalize one raw country token (default packaged alias map)."""
    return (country_map or _default_map()).normalize(raw)


_DEFAULT_MAP: CountryMap | None = None


def _default_map() -> CountryMap:
    global _DEFAULT_MAP
    if _DEFAULT_MAP is None:
        _DEFAULT_MAP = CountryMap.default()
    return _DEFAULT_MAP


@dataclass(frozen=True)
class PublicationRecord:
    """One normalized bibliographic record."""

    year: int
    doc_type: DocType
    language: str
    countries: frozenset[str]
    categories: frozenset[str]
    times_cited: int
    doi: str | None = None
    first_author_country: str | None = None

    def __post_init__(self):
        if self.times_cited < 0:
            raise ValueError("times_cited must be >= 0")
        if self.first_author_country is not None and self.first_author_country not in self.countries:
            raise ValueError("first_author_country must be one of the record's countries")


@dataclass(frozen=True)
class DedupStats:
    """Provenance counts from corpus construction.

    ``input_count == len(records) + duplicate_count + rejected_count`` holds
    exactly for every built corpus.
    """

    input_count: int = 0
    duplicate_count: int = 0
    no_doi_count: int = 0
    rejected: Mapping[str, int] = field(default_factory=dict)
    warnings: Mapping[str, int] = field(default_factory=dict)

    @property
    def rejected_count(self) -> int:
        return sum(self.rejected.values())


@dataclass(frozen=True)
class Corpus:
    """Deduplicated, immutable collection of records.

    Equality compares records only; provenance counters are excluded so a
    corpus written to the interchange format and read back compares equal.
    """

    records: tuple[PublicationRecord, ...]
    dedup_stats: DedupStats = field(default_factory=DedupStats, compare=False)

    def __post_init__(self):
        seen: set[str] = set()
        for record in self.records:
            if not record.countries:
                raise ValueError("corpus records must carry at least one country")
            if record.doi:
                if record.doi in seen:
                    raise ValueError(f"duplicate doi in corpus: {record.doi}")
                seen.add(record.doi)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[PublicationRecord]:
        return iter(self.records)

    @cached_property
    def arrays(self):
        """Packed integer view used by the counting kernels."""
        from .columnar import build_arrays

        return build_arrays(self)


def classify(record: PublicationRecord, focal: str, partner: str) -> Label:
    """Label one record relative to a focal/partner country pair.

    Raises :class:`FocalAbsentError` when the record does not involve the
    focal country at all (such records are rejected at ingest).
    """
    if focal == partner:
        raise ValueError("focal and partner must differ")
    countries = record.countries
    if focal not in countries:
        raise FocalAbsentError(f"record does not involve {focal!r}")
    if len(countries) == 1:
        return Label.INDIGENOUS
    if partner in countries:
        return Label.BILATERAL_PARTNER
    return Label.OTHER_INTERNATIONAL


#: kernel label codes, index-aligned with LABEL_ORDER
LABEL_ORDER = (Label.INDIGENOUS, Label.BILATERAL_PARTNER, Label.OTHER_INTERNATIONAL)


def corpus_labels(corpus: Corpus, focal: str, partner: str) -> np.ndarray:
    """Classify every record; returns a uint8 array of kernel label codes."""
    from . import kernels

    if focal == partner:
        raise ValueError("focal and partner must differ")
    arrays = corpus.arrays
    focal_id = arrays.vocab.get(focal, -1)
    partner_id = arrays.vocab.get(partner, -1)
    labels = kernels.classify_labels(arrays.offsets, arrays.country_ids, focal_id, partner_id)
    bad = int((labels == 255).sum())
    if bad:
        raise FocalAbsentError(f"{bad} records do not involve {focal!r}")
    return labels
