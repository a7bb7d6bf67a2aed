"""Deterministic synthetic-corpus generation.

Produces a parseable field-tagged export plus a ground-truth sidecar
(one JSON object per record) so the whole ingest/classify pipeline can
be checked against known answers. The same spec and seed always yield
byte-identical files.

Class mix: a uniform draw u picks BilateralPartner when u < bilateral_rate,
OtherInternational when u < icp_rate, Indigenous otherwise. Citation
counts follow a zero-inflated shifted geometric: 0 with probability
zero_inflation, else 1 + Geometric(1/mean_citations), so both citedness
and citations-per-paper are exercised.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import InvalidSpecError

_SPEC_KEYS = {
    "seed",
    "record_count",
    "year_start",
    "year_end",
    "focal",
    "partner",
    "countries",
    "bilateral_rate",
    "icp_rate",
    "zero_inflation",
    "mean_citations",
    "categories",
}


@dataclass(frozen=True)
class SynthSpec:
    """Generator parameters; see README for the key=value file format."""

    seed: int = 42
    record_count: int = 1000
    year_start: int = 1990
    year_end: int = 2020
    focal: str = "India"
    partner: str = "USA"
    country_pool: tuple[tuple[str, float], ...] = (
        ("Germany", 3.0),
        ("England", 2.0),
        ("Japan", 2.0),
        ("France", 1.0),
    )
    bilateral_rate: float = 0.25
    icp_rate: float = 0.45
    zero_inflation: float = 0.15
    mean_citations: float = 8.0
    category_pool: tuple[str, ...] = (
        "Biology",
        "Chemistry, Physical",
        "Physics, Applied",
        "Multidisciplinary Sciences",
    )

    def __post_init__(self):
        if self.record_count < 0:
            raise InvalidSpecError("record_count must be >= 0")
        if self.year_start > self.year_end:
            raise InvalidSpecError("year_start must be <= year_end")
        for name in ("bilateral_rate", "icp_rate", "zero_inflation"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidSpecError(f"{name} must be in [0, 1], got {value}")
        if self.bilateral_rate > self.icp_rate:
            raise InvalidSpecError("bilateral_rate cannot exceed icp_rate")
        if self.mean_citations < 1.0:
            raise InvalidSpecError("mean_citations must be >= 1")
        if not self.focal or not self.partner or self.focal == self.partner:
            raise InvalidSpecError("focal and partner must be distinct, non-empty tokens")
        pool_names = [name for name, _ in self.country_pool]
        if len(set(pool_names)) != len(pool_names):
            raise InvalidSpecError("country pool entries must be unique")
        if self.focal in pool_names or self.partner in pool_names:
            raise InvalidSpecError("country pool must not contain the focal or partner country")
        if any(weight <= 0 for _, weight in self.country_pool):
            raise InvalidSpecError("country weights must be > 0")
        if self.icp_rate > self.bilateral_rate and not self.country_pool:
            raise InvalidSpecError("a country pool is required when icp_rate > bilateral_rate")
        if not self.category_pool:
            raise InvalidSpecError("category pool must be non-empty")

    @classmethod
    def from_mapping(cls, mapping: dict[str, str]) -> "SynthSpec":
        unknown = set(mapping) - _SPEC_KEYS
        if unknown:
            raise InvalidSpecError(f"unknown spec keys: {sorted(unknown)}")
        kwargs: dict = {}
        try:
            for key in ("seed", "record_count", "year_start", "year_end"):
                if key in mapping:
                    kwargs[key] = int(mapping[key])
            for key in ("bilateral_rate", "icp_rate", "zero_inflation", "mean_citations"):
                if key in mapping:
                    kwargs[key] = float(mapping[key])
        except ValueError as exc:
            raise InvalidSpecError(f"bad numeric value: {exc}") from exc
        for key in ("focal", "partner"):
            if key in mapping:
                kwargs[key] = mapping[key].strip()
        if "countries" in mapping:
            kwargs["country_pool"] = _parse_pool(mapping["countries"])
        if "categories" in mapping:
            pool = tuple(p.strip() for p in mapping["categories"].split(";") if p.strip())
            if not pool:
                raise InvalidSpecError("categories must list at least one name")
            kwargs["category_pool"] = pool
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str | Path) -> "SynthSpec":
        """Parse a key=value spec file (# comments, blank lines ignored)."""
        mapping: dict[str, str] = {}
        with open(path, encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, start=1):
                entry = line.split("#", 1)[0].strip()
                if not entry:
                    continue
                key, sep, value = entry.partition("=")
                if not sep:
                    raise InvalidSpecError(f"line {line_no}: expected key=value, got {entry!r}")
                mapping[key.strip()] = value.strip()
        return cls.from_mapping(mapping)


def _parse_pool(raw: str) -> tuple[tuple[str, float], ...]:
    """Parse "Germany:3, Japan:2, France" (weight defaults to 1)."""
    pool: list[tuple[str, float]] = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, weight = part.partition(":")
        try:
            pool.append((name.strip(), float(weight) if sep else 1.0))
        except ValueError as exc:
            raise InvalidSpecError(f"bad country weight in {part!r}") from exc
    if not pool:
        raise InvalidSpecError("countries must list at least one name")
    return tuple(pool)


@dataclass(frozen=True)
class SynthRecord:
    """One generated record plus its expected pipeline outcome."""

    doi: str
    year: int
    label: str
    doc_type: str
    dt_value: str
    countries: tuple[str, ...]  # author order; first entry = first author's
    categories: tuple[str, ...]
    times_cited: int

    @property
    def first_author_country(self) -> str:
        return self.countries[0]


@dataclass(frozen=True)
class SynthResult:
    spec: SynthSpec
    export_path: Path
    sidecar_path: Path
    records: tuple[SynthRecord, ...] = field(repr=False)


def _sample_distinct(rng: random.Random, pool: list[tuple[str, float]], k: int) -> list[str]:
    names = [name for name, _ in pool]
    weights = [weight for _, weight in pool]
    chosen: list[str] = []
    for _ in range(min(k, len(names))):
        total = sum(weights)
        r = rng.random() * total
        acc = 0.0
        idx = len(weights) - 1
        for j, weight in enumerate(weights):
            acc += weight
            if r < acc:
                idx = j
                break
        chosen.append(names.pop(idx))
        weights.pop(idx)
    return chosen


def _draw_citations(rng: random.Random, zero_inflation: float, mean: float) -> int:
    if rng.random() < zero_inflation:
        return 0
    if mean <= 1.0:
        return 1
    p = 1.0 / mean
    u = 1.0 - rng.random()  # in (0, 1]
    return 1 + int(math.log(u) / math.log(1.0 - p))


def make_records(spec: SynthSpec) -> tuple[SynthRecord, ...]:
    """Draw every record; the draw order is part of the format contract."""
    rng = random.Random(spec.seed)
    pool = list(spec.country_pool)
    records: list[SynthRecord] = []
    for i in range(1, spec.record_count + 1):
        u = rng.random()
        if u < spec.bilateral_rate:
            label = "BilateralPartner"
            v = rng.random()
            extras = 0 if v < 0.7 else (1 if v < 0.9 else 2)
            countries = [spec.focal, spec.partner] + _sample_distinct(rng, pool, extras)
        elif u < spec.icp_rate:
            label = "OtherInternational"
            v = rng.random()
            k = 1 if v < 0.6 else (2 if v < 0.9 else 3)
            countries = [spec.focal] + _sample_distinct(rng, pool, k)
        else:
            label = "Indigenous"
            countries = [spec.focal]

        first = rng.randrange(len(countries))
        countries = [countries[first]] + countries[:first] + countries[first + 1 :]

        year = rng.randint(spec.year_start, spec.year_end)

        w = rng.random()
        if w < 0.05:
            dt_value, doc_type = "Article; Proceedings Paper", "Article"
        elif w < 0.20:
            dt_value, doc_type = "Review", "Review"
        else:
            dt_value, doc_type = "Article", "Article"

        n_cats = 2 if (len(spec.category_pool) >= 2 and rng.random() < 0.25) else 1
        categories = tuple(sorted(rng.sample(spec.category_pool, n_cats)))

        cited = _draw_citations(rng, spec.zero_inflation, spec.mean_citations)
        records.append(
            SynthRecord(
                doi=f"10.5555/synth.{spec.seed}.{i:06d}",
                year=year,
                label=label,
                doc_type=doc_type,
                dt_value=dt_value,
                countries=tuple(countries),
                categories=categories,
                times_cited=cited,
            )
        )
    return tuple(records)


def _author_name(record_index: int, position: int) -> str:
    return f"Author{record_index:06d}{chr(65 + position)}, A."


def _render_address(rng: random.Random, record_index: int, position: int, country: str) -> str:
    author = _author_name(record_index, position)
    if country == "USA" and rng.random() < 0.5:
        tail = "MA 02139 USA"
    else:
        tail = country
    return f"[{author}] Univ {record_index}-{position}, City {position}, {tail}."


def write_export(spec: SynthSpec, records: tuple[SynthRecord, ...], path: Path) -> None:
    """Write the field-tagged file; address rendering draws from its own rng."""
    rng = random.Random(spec.seed + 1)
    lines: list[str] = ["FN Synthetic Bibliographic Export", "VR 1.0"]
    for i, record in enumerate(records, start=1):
        lines.append("PT J")
        authors = [_author_name(i, j) for j in range(len(record.countries))]
        lines.append(f"AU {authors[0]}")
        lines.extend(f"   {name}" for name in authors[1:])
        lines.append(f"TI Synthetic record {i}")
        lines.append("LA English")
        lines.append(f"DT {record.dt_value}")
        addresses = [
            _render_address(rng, i, j, country) for j, country in enumerate(record.countries)
        ]
        lines.append(f"C1 {addresses[0]}")
        lines.extend(f"   {address}" for address in addresses[1:])
        lines.append(f"WC {'; '.join(record.categories)}")
        lines.append(f"Z9 {record.times_cited}")
        lines.append(f"PY {record.year}")
        lines.append(f"DI {record.doi}")
        lines.append("ER")
        lines.append("")
    lines.append("EF")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_sidecar(records: tuple[SynthRecord, ...], path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(
                json.dumps(
                    {
                        "doi": record.doi,
                        "year": record.year,
                        "label": record.label,
                        "doc_type": record.doc_type,
                        "countries": sorted(record.countries),
                        "categories": sorted(record.categories),
                        "times_cited": record.times_cited,
                        "first_author_country": record.first_author_country,
                    },
                    ensure_ascii=False,
                )
            )
            handle.write("\n")


def generate(spec: SynthSpec, out_dir: str | Path) -> SynthResult:
    """Write export.txt and ground_truth.ndjson under out_dir."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    records = make_records(spec)
    export_path = out / "export.txt"
    sidecar_path = out / "ground_truth.ndjson"
    write_export(spec, records, export_path)
    write_sidecar(records, sidecar_path)
    return SynthResult(spec=spec, export_path=export_path, sidecar_path=sidecar_path, records=records)
