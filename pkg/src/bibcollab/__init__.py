"""Bilateral research-collaboration analytics over Web of Science exports.

Parse field-tagged or tab-delimited exports into an immutable corpus,
classify each record as indigenous, bilateral-partner or
other-international relative to a focal/partner country pair, and derive
year-wise shares, growth rates, citation impact, collaboration-intensity
ratios, boost indicators and subject-category analytics from it.
"""

from .boost import (
    BoostInputs,
    BoostReport,
    boost_report,
    boost_report_from_corpus,
    citation_boost,
    citedness_boost,
    impact_per_unit_citedness,
    impact_per_unit_productivity,
    productivity_boost,
)
from .categories import CategoryStats, category_breadth, category_stats, top_categories
from .indicators import (
    FirstAuthorSeries,
    ImpactRow,
    ImpactSummary,
    YearRow,
    YearSeries,
    cagr,
    first_author_share,
    impact_summary,
    year_series,
)
from .ingest import (
    CorpusFilters,
    RawRecordBlock,
    build_corpus,
    extract_countries,
    load_corpus,
    parse_field_tagged,
    parse_tab_delimited,
    read_interchange,
    write_interchange,
)
from .records import (
    Corpus,
    CountryMap,
    DedupStats,
    DocType,
    Label,
    PublicationRecord,
    classify,
    corpus_labels,
    normalize_country,
)
from .ric import PairwiseCollabTable, RicSeries, ric, ric_series, ric_with_flag
from .synth import SynthSpec, generate

__version__ = "0.1.0"

__all__ = [
    "BoostInputs",
    "BoostReport",
    "CategoryStats",
    "Corpus",
    "CorpusFilters",
    "CountryMap",
    "DedupStats",
    "DocType",
    "FirstAuthorSeries",
    "ImpactRow",
    "ImpactSummary",
    "Label",
    "PairwiseCollabTable",
    "PublicationRecord",
    "RawRecordBlock",
    "RicSeries",
    "SynthSpec",
    "YearRow",
    "YearSeries",
    "boost_report",
    "boost_report_from_corpus",
    "build_corpus",
    "cagr",
    "category_breadth",
    "category_stats",
    "citation_boost",
    "citedness_boost",
    "classify",
    "corpus_labels",
    "extract_countries",
    "first_author_share",
    "generate",
    "impact_per_unit_citedness",
    "impact_per_unit_productivity",
    "impact_summary",
    "load_corpus",
    "normalize_country",
    "parse_field_tagged",
    "parse_tab_delimited",
    "productivity_boost",
    "read_interchange",
    "ric",
    "ric_series",
    "ric_with_flag",
    "top_categories",
    "write_interchange",
    "year_series",
]
