"""Web of Science export parsing and corpus construction.

Two input shapes are supported:

* field-tagged plain text: optional ``FN``/``VR`` header, one record per
  ``PT`` .. ``ER`` span, file terminated by ``EF``; a field line is a
  two-character tag, a space, then the value; a line starting with three
  spaces continues the previous tag with one more value;
* tab-delimited: a header row of two-character tags, one record per row,
  multi-value cells joined by ``"; "``.

Both feed the same block shape, so a fixture exported either way builds
the same corpus. Parsed corpora can be persisted to a newline-delimited
JSON interchange file and reloaded losslessly.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import HeaderMissingError, MalformedBlockError
from .records import (
    Corpus,
    CountryMap,
    DedupStats,
    DocType,
    PublicationRecord,
)

_TAG_RE = re.compile(r"^[A-Z][A-Z0-9](?: |$)")
_CONTINUATION = "   "


@dataclass
class RawRecordBlock:
    """Tag to list-of-values map for one record."""

    fields: dict[str, list[str]] = field(default_factory=dict)
    line_no: int = 0

    def first(self, tag: str) -> str | None:
        values = self.fields.get(tag)
        return values[0] if values else None

    def values(self, tag: str) -> list[str]:
        return self.fields.get(tag, [])


def parse_field_tagged(
    stream: Iterable[str],
    malformed: list[MalformedBlockError] | None = None,
) -> Iterator[RawRecordBlock]:
    """Yield one block per PT..ER span.

    Structural problems (ER without PT, record or file truncated before
    its terminator) are appended to ``malformed`` with their line number
    and parsing resumes at the next PT; pass None to discard them.
    """
    sink = malformed if malformed is not None else []
    block: RawRecordBlock | None = None
    tag: str | None = None
    saw_content = False
    saw_ef = False
    line_no = 0

    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        saw_content = True
        if block is not None and line.startswith(_CONTINUATION):
            if tag is not None:
                block.fields[tag].append(line.strip())
            continue
        if not _TAG_RE.match(line):
            continue  # stray prose between records (header banners etc.)
        this_tag, value = line[:2], line[2:].strip()
        if this_tag == "EF":
            saw_ef = True
            continue
        if this_tag == "PT":
            if block is not None:
                sink.append(MalformedBlockError("record not terminated by ER", block.line_no))
            block = RawRecordBlock(line_no=line_no)
            tag = "PT"
            block.fields["PT"] = [value] if value else []
            continue
        if this_tag == "ER":
            if block is None:
                sink.append(MalformedBlockError("ER without matching PT", line_no))
            else:
                yield block
            block = None
            tag = None
            continue
        if block is not None:
            tag = this_tag
            block.fields.setdefault(tag, [])
            if value:
                block.fields[tag].append(value)

    if block is not None:
        sink.append(MalformedBlockError("record truncated before ER", block.line_no))
    if saw_content and not saw_ef:
        sink.append(MalformedBlockError("file truncated before EF", line_no))


def split_multivalue(cell: str) -> list[str]:
    """Split a multi-value cell on ";" outside square brackets.

    Bracketed author lists ("[Smith, A; Lee, B] MIT, ...") contain
    semicolons that must not split the address.
    """
    parts: list[str] = []
    depth = 0
    start = 0
    for i, ch in enumerate(cell):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth = max(0, depth - 1)
        elif ch == ";" and depth == 0:
            parts.append(cell[start:i])
            start = i + 1
    parts.append(cell[start:])
    return [p.strip() for p in parts if p.strip()]


def parse_tab_delimited(
    stream: Iterable[str],
    malformed: list[MalformedBlockError] | None = None,
) -> Iterator[RawRecordBlock]:
    """Yield one block per data row; rows with the wrong cell count are skipped."""
    sink = malformed if malformed is not None else []
    lines = iter(stream)
    header_line = next(lines, None)
    if header_line is None:
        raise HeaderMissingError("empty tab-delimited input: no header row")
    tags = [t.strip() for t in header_line.rstrip("\r\n").split("\t")]
    if not tags or any(not re.fullmatch(r"[A-Z][A-Z0-9]", t) for t in tags):
        raise HeaderMissingError(f"header row is not a list of 2-character tags: {tags!r}")

    for line_no, raw in enumerate(lines, start=2):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        cells = line.split("\t")
        if len(cells) != len(tags):
            sink.append(
                MalformedBlockError(
                    f"row has {len(cells)} cells, header has {len(tags)}", line_no
                )
            )
            continue
        block = RawRecordBlock(line_no=line_no)
        for tag, cell in zip(tags, cells):
            block.fields[tag] = split_multivalue(cell)
        yield block


def _strip_bracket_prefix(address: str) -> tuple[str, str | None]:
    """Return (address without author-list prefix, bracket contents or None)."""
    text = address.strip()
    if text.startswith("["):
        end = text.find("]")
        if end >= 0:
            return text[end + 1 :].strip(), text[1:end]
    return text, None


def _country_of_address(address: str, country_map: CountryMap) -> str | None:
    """Token after the final comma, or None when the address has no comma."""
    if "," not in address:
        return None
    tail = address.rsplit(",", 1)[1].strip().rstrip(".").strip()
    if not tail:
        return None
    # US addresses end "<STATE> <ZIP> USA"; collapse to the country token.
    if tail.split()[-1].casefold() == "usa":
        tail = "USA"
    return country_map.normalize(tail)


def extract_countries(
    c1_values: list[str],
    country_map: CountryMap | None = None,
) -> tuple[frozenset[str], int]:
    """Country tokens from C1 address values, plus the skipped-address count.

    Each value may hold several ";"-separated addresses, each optionally
    prefixed by a bracketed author list. An address without a comma has no
    country segment and is skipped.
    """
    cmap = country_map or CountryMap.default()
    found: set[str] = set()
    skipped = 0
    for value in c1_values:
        for address in split_multivalue(value):
            body, _ = _strip_bracket_prefix(address)
            country = _country_of_address(body, cmap)
            if country is None:
                skipped += 1
            else:
                found.add(country)
    return frozenset(found), skipped


def _author_key(name: str) -> tuple[str, str]:
    """(surname, first given initial); matches "Singh, VK" to "Singh, Vivek Kumar"."""
    surname, _, given = name.partition(",")
    return surname.strip().casefold(), given.strip()[:1].casefold()


def first_author_country(block: RawRecordBlock, country_map: CountryMap) -> str | None:
    """Country of the C1 address naming the first AU author.

    Falls back to the first parseable C1 address when no bracketed author
    list matches (or none exists).
    """
    c1_values = block.values("C1")
    if not c1_values:
        return None
    first_au = block.first("AU")
    fallback: str | None = None
    for value in c1_values:
        for address in split_multivalue(value):
            body, authors = _strip_bracket_prefix(address)
            country = _country_of_address(body, country_map)
            if country is None:
                continue
            if fallback is None:
                fallback = country
            if first_au and authors:
                keys = {_author_key(a) for a in authors.split(";")}
                if _author_key(first_au) in keys:
                    return country
    return fallback


@dataclass(frozen=True)
class CorpusFilters:
    """Inclusion rules applied before deduplication."""

    focal: str = "India"
    doc_types: frozenset[DocType] = frozenset({DocType.ARTICLE, DocType.REVIEW})
    language: str = "English"
    year_start: int = 1990
    year_end: int = 2020

    def __post_init__(self):
        if self.year_start > self.year_end:
            raise ValueError("year_start must be <= year_end")


def build_corpus(
    blocks: Iterable[RawRecordBlock],
    filters: CorpusFilters | None = None,
    country_map: CountryMap | None = None,
    parse_warnings: dict[str, int] | None = None,
) -> Corpus:
    """Filter, normalize and deduplicate blocks into a Corpus.

    Rejection reasons are counted, never raised; the conservation law
    input_count == len(corpus) + duplicates + rejections holds exactly.
    """
    filt = filters or CorpusFilters()
    cmap = country_map or CountryMap.default()
    rejected: Counter[str] = Counter()
    warnings: Counter[str] = Counter(parse_warnings or {})
    records: list[PublicationRecord] = []
    seen_dois: set[str] = set()
    input_count = 0
    duplicate_count = 0
    no_doi_count = 0

    for block in blocks:
        input_count += 1

        dt_raw = block.first("DT")
        doc_type = DocType.from_wos(dt_raw) if dt_raw else None
        if doc_type is None or doc_type not in filt.doc_types:
            rejected["doc_type"] += 1
            continue

        language = block.first("LA") or ""
        if language.casefold() != filt.language.casefold():
            rejected["language"] += 1
            continue

        py_raw = block.first("PY")
        try:
            year = int(py_raw) if py_raw else None
        except ValueError:
            year = None
        if year is None:
            rejected["year_missing"] += 1
            continue
        if not (filt.year_start <= year <= filt.year_end):
            rejected["year_out_of_window"] += 1
            continue

        countries, skipped = extract_countries(block.values("C1"), cmap)
        if skipped:
            warnings["address_without_country"] += skipped
        if not countries:
            rejected["no_countries"] += 1
            continue
        if filt.focal not in countries:
            rejected["focal_absent"] += 1
            continue

        doi = block.first("DI")
        if doi and doi in seen_dois:
            duplicate_count += 1
            continue

        z9_raw = block.first("Z9")
        try:
            times_cited = int(z9_raw) if z9_raw is not None else None
        except ValueError:
            times_cited = None
        if times_cited is None or times_cited < 0:
            warnings["times_cited_missing"] += 1
            times_cited = 0

        categories = frozenset(
            part.strip() for value in block.values("WC") for part in value.split(";") if part.strip()
        )
        fac = first_author_country(block, cmap)
        if fac is not None and fac not in countries:
            fac = None
        records.append(
            PublicationRecord(
                year=year,
                doc_type=doc_type,
                language=language,
                countries=countries,
                categories=categories,
                times_cited=times_cited,
                doi=doi or None,
                first_author_country=fac,
            )
        )
        if doi:
            seen_dois.add(doi)
        else:
            no_doi_count += 1

    stats = DedupStats(
        input_count=input_count,
        duplicate_count=duplicate_count,
        no_doi_count=no_doi_count,
        rejected=dict(sorted(rejected.items())),
        warnings=dict(sorted(warnings.items())),
    )
    return Corpus(records=tuple(records), dedup_stats=stats)


def load_corpus(
    paths: Iterable[str | Path],
    fmt: str = "tagged",
    filters: CorpusFilters | None = None,
    country_map: CountryMap | None = None,
) -> Corpus:
    """Parse one or more export files and build a single corpus."""
    if fmt not in ("tagged", "tsv"):
        raise ValueError(f"unknown input format: {fmt!r}")
    malformed: list[MalformedBlockError] = []

    def blocks() -> Iterator[RawRecordBlock]:
        for path in paths:
            with open(path, encoding="utf-8") as handle:
                parser = parse_field_tagged if fmt == "tagged" else parse_tab_delimited
                yield from parser(handle, malformed)

    corpus = build_corpus(blocks(), filters=filters, country_map=country_map)
    if malformed:
        warnings = dict(corpus.dedup_stats.warnings)
        warnings["malformed_blocks"] = warnings.get("malformed_blocks", 0) + len(malformed)
        corpus = replace(corpus, dedup_stats=replace(corpus.dedup_stats, warnings=warnings))
    return corpus


# ---------------------------------------------------------------------------
# Interchange format: one JSON object per line, stable key order, LF endings.


def record_to_dict(record: PublicationRecord) -> dict:
    return {
        "doi": record.doi,
        "year": record.year,
        "doc_type": record.doc_type.value,
        "language": record.language,
        "countries": sorted(record.countries),
        "categories": sorted(record.categories),
        "times_cited": record.times_cited,
        "first_author_country": record.first_author_country,
    }


def record_from_dict(data: dict) -> PublicationRecord:
    return PublicationRecord(
        year=data["year"],
        doc_type=DocType(data["doc_type"]),
        language=data["language"],
        countries=frozenset(data["countries"]),
        categories=frozenset(data.get("categories", [])),
        times_cited=data["times_cited"],
        doi=data.get("doi"),
        first_author_country=data.get("first_author_country"),
    )


def write_interchange(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in corpus.records:
            handle.write(json.dumps(record_to_dict(record), ensure_ascii=False))
            handle.write("\n")


def read_interchange(path: str | Path) -> Corpus:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(record_from_dict(json.loads(line)))
    return Corpus(records=tuple(records))
