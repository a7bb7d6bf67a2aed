"""Command-line interface.

Subcommands: ingest, timeseries, impact, first-author, ric, boost,
categories, synth, report. Usage errors exit 2 (argparse); data errors
exit 1 with a one-line JSON object on stderr. Analytics subcommands read
either a previously ingested interchange file (--corpus) or raw exports
(--input, with the ingest filter flags).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import emit
from .boost import CITEDNESS_MODES, boost_report_from_corpus
from .categories import category_stats
from .errors import BibcollabError
from .indicators import first_author_share, impact_summary, year_series
from .ingest import (
    CorpusFilters,
    load_corpus,
    read_interchange,
    record_to_dict,
    write_interchange,
)
from .records import Corpus, CountryMap, DocType
from .ric import PairwiseCollabTable, ric_series, ric_with_flag
from .synth import SynthSpec, generate

log = logging.getLogger("bibcollab")

ALIAS_MAP_ENV = "BIBCOLLAB_ALIAS_MAP"


def _add_filter_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--focal", default="India", help="focal country (default: India)")
    parser.add_argument("--from", dest="year_start", type=int, default=1990, metavar="YEAR")
    parser.add_argument("--to", dest="year_end", type=int, default=2020, metavar="YEAR")
    parser.add_argument(
        "--doc-types", default="Article,Review", help="comma list of document types to keep"
    )
    parser.add_argument("--language", default="English")
    parser.add_argument("--alias-map", default=None, help=f"country alias file (or ${ALIAS_MAP_ENV})")


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", default=None, help="interchange file written by ingest")
    parser.add_argument("--input", nargs="+", default=None, help="raw export file(s)")
    parser.add_argument(
        "--input-format", choices=("tagged", "tsv"), default="tagged", help="raw export layout"
    )
    _add_filter_args(parser)
    parser.add_argument("--partner", default="USA", help="partner country (default: USA)")


def _add_output_args(parser: argparse.ArgumentParser, formats: tuple[str, ...] = ("csv", "json")) -> None:
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--out", default="-", help="output path, - for stdout")


def _country_map(args: argparse.Namespace) -> CountryMap:
    path = args.alias_map or os.environ.get(ALIAS_MAP_ENV)
    return CountryMap.from_file(path) if path else CountryMap.default()


def _doc_types(raw: str) -> frozenset[DocType]:
    wanted = set()
    by_value = {dt.value.casefold(): dt for dt in DocType}
    for part in raw.split(","):
        token = part.strip().casefold()
        if not token:
            continue
        if token not in by_value:
            raise ValueError(f"unknown document type {part.strip()!r}")
        wanted.add(by_value[token])
    if not wanted:
        raise ValueError("at least one document type is required")
    return frozenset(wanted)


def _filters(args: argparse.Namespace) -> CorpusFilters:
    return CorpusFilters(
        focal=args.focal,
        doc_types=_doc_types(args.doc_types),
        language=args.language,
        year_start=args.year_start,
        year_end=args.year_end,
    )


def _load_source(args: argparse.Namespace, parser: argparse.ArgumentParser) -> Corpus:
    if args.corpus and args.input:
        parser.error("--corpus and --input are mutually exclusive")
    if args.corpus:
        return read_interchange(args.corpus)
    if args.input:
        return load_corpus(
            args.input, fmt=args.input_format, filters=_filters(args), country_map=_country_map(args)
        )
    parser.error("one of --corpus or --input is required")
    raise AssertionError("unreachable")


def _write_output(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _stats_payload(corpus: Corpus, cmap: CountryMap | None) -> dict:
    stats = corpus.dedup_stats
    payload = {
        "input_count": stats.input_count,
        "corpus_count": len(corpus),
        "duplicate_count": stats.duplicate_count,
        "no_doi_count": stats.no_doi_count,
        "rejected": dict(stats.rejected),
        "warnings": dict(stats.warnings),
    }
    if cmap is not None:
        payload["unmapped_tokens"] = dict(sorted(cmap.unmapped.items()))
    return payload


# -- subcommand handlers ----------------------------------------------------


def _cmd_ingest(args, parser) -> int:
    cmap = _country_map(args)
    corpus = load_corpus(args.input, fmt=args.format, filters=_filters(args), country_map=cmap)
    if args.out == "-":
        for record in corpus.records:
            sys.stdout.write(json.dumps(record_to_dict(record), ensure_ascii=False) + "\n")
    else:
        write_interchange(corpus, args.out)
    payload = _stats_payload(corpus, cmap)
    if args.stats:
        with open(args.stats, "w", encoding="utf-8", newline="") as handle:
            handle.write(json.dumps(payload, indent=2) + "\n")
    log.info(
        "ingested %d of %d blocks (%d duplicates, %d rejected)",
        len(corpus),
        payload["input_count"],
        payload["duplicate_count"],
        sum(payload["rejected"].values()),
    )
    return 0


def _cmd_timeseries(args, parser) -> int:
    series = year_series(_load_source(args, parser), args.focal, args.partner)
    text = emit.timeseries_csv(series) if args.format == "csv" else emit.timeseries_json(series)
    _write_output(text, args.out)
    return 0


def _cmd_impact(args, parser) -> int:
    summary = impact_summary(_load_source(args, parser), args.focal, args.partner)
    text = emit.impact_csv(summary) if args.format == "csv" else emit.impact_json(summary)
    _write_output(text, args.out)
    return 0


def _cmd_first_author(args, parser) -> int:
    series = first_author_share(_load_source(args, parser), args.focal, args.partner)
    text = emit.first_author_csv(series) if args.format == "csv" else emit.first_author_json(series)
    _write_output(text, args.out)
    return 0


def _cmd_ric(args, parser) -> int:
    partners = [p.strip() for p in (args.partners or "").split(",") if p.strip()]
    if args.table:
        table = PairwiseCollabTable.from_csv(args.table)
        if not partners:
            partners = [c for c in table.countries if c != args.focal]
        rows = [(p, *ric_with_flag(table, args.focal, p)) for p in partners]
        text = emit.ric_pairs_csv(rows) if args.format == "csv" else emit.ric_pairs_json(args.focal, rows)
        _write_output(text, args.out)
        return 0
    if not partners:
        parser.error("--partners is required without --table")
    system = None
    if args.countries:
        system = [c.strip() for c in args.countries.split(",") if c.strip()]
    series = ric_series(
        _load_source(args, parser),
        args.focal,
        partners,
        year_start=args.year_start,
        year_end=args.year_end,
        mode=args.mode,
        system=system,
    )
    text = emit.ric_csv(series) if args.format == "csv" else emit.ric_json(series)
    _write_output(text, args.out)
    return 0


def _cmd_boost(args, parser) -> int:
    report = boost_report_from_corpus(
        _load_source(args, parser), args.focal, args.partner, citedness_mode=args.citedness_mode
    )
    _write_output(emit.boost_json(report, focal=args.focal, partner=args.partner), args.out)
    return 0


def _cmd_categories(args, parser) -> int:
    stats = category_stats(_load_source(args, parser), args.focal, args.partner)
    if args.breadth:
        text = emit.category_breadth_csv(stats) if args.format == "csv" else emit.category_breadth_json(stats)
    else:
        top = stats.top(args.top)
        text = emit.top_categories_csv(top) if args.format == "csv" else emit.top_categories_json(top)
    _write_output(text, args.out)
    return 0


def _cmd_synth(args, parser) -> int:
    spec = SynthSpec.from_file(args.spec) if args.spec else SynthSpec()
    result = generate(spec, args.out)
    log.info("wrote %s and %s", result.export_path, result.sidecar_path)
    return 0


def _cmd_report(args, parser) -> int:
    corpus = _load_source(args, parser)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    series = year_series(corpus, args.focal, args.partner)
    summary = impact_summary(corpus, args.focal, args.partner)
    stats = category_stats(corpus, args.focal, args.partner)
    authors = first_author_share(corpus, args.focal, args.partner)
    report = boost_report_from_corpus(corpus, args.focal, args.partner, citedness_mode=args.citedness_mode)
    outputs = {
        "timeseries.csv": emit.timeseries_csv(series),
        "impact.csv": emit.impact_csv(summary),
        "top_categories.csv": emit.top_categories_csv(stats.top(args.top)),
        "category_breadth.csv": emit.category_breadth_csv(stats),
        "first_author.csv": emit.first_author_csv(authors),
        "boost.json": emit.boost_json(report, focal=args.focal, partner=args.partner),
    }
    for name, text in outputs.items():
        with open(out / name, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    log.info("wrote %d report files to %s", len(outputs), out)
    return 0


# -- parser wiring ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bibcollab",
        description="Bilateral research-collaboration analytics over Web of Science exports.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    parser.add_argument("--quiet", action="store_true", help="log errors only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse raw exports into the interchange format")
    p.add_argument("--input", nargs="+", required=True, help="raw export file(s)")
    p.add_argument("--format", choices=("tagged", "tsv"), default="tagged")
    _add_filter_args(p)
    p.add_argument("--out", default="-", help="interchange output path, - for stdout")
    p.add_argument("--stats", default=None, help="write ingest statistics JSON here")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("timeseries", help="year-wise totals, shares and growth")
    _add_source_args(p)
    _add_output_args(p)
    p.set_defaults(func=_cmd_timeseries)

    p = sub.add_parser("impact", help="citedness and citations per paper by class")
    _add_source_args(p)
    _add_output_args(p)
    p.set_defaults(func=_cmd_impact)

    p = sub.add_parser("first-author", help="focal-country first-author share of bilateral papers")
    _add_source_args(p)
    _add_output_args(p)
    p.set_defaults(func=_cmd_first_author)

    p = sub.add_parser("ric", help="relative intensity of collaboration")
    _add_source_args(p)
    p.add_argument("--partners", default=None, help="comma list of partner countries")
    p.add_argument("--countries", default=None, help="comma list defining the country system")
    p.add_argument("--mode", choices=("yearly", "cumulative"), default="yearly")
    p.add_argument("--table", default=None, help="externally supplied pair-count matrix CSV")
    _add_output_args(p)
    p.set_defaults(func=_cmd_ric)

    p = sub.add_parser("boost", help="bilateral boost indicator suite")
    _add_source_args(p)
    p.add_argument("--citedness-mode", choices=CITEDNESS_MODES, default="combined")
    _add_output_args(p, formats=("json",))
    p.set_defaults(func=_cmd_boost)

    p = sub.add_parser("categories", help="subject-category volume and breadth")
    _add_source_args(p)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--breadth", action="store_true", help="emit per-year distinct-category counts")
    _add_output_args(p)
    p.set_defaults(func=_cmd_categories)

    p = sub.add_parser("synth", help="generate a synthetic export with ground truth")
    p.add_argument("--spec", default=None, help="key=value spec file (defaults used when omitted)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("report", help="write the full report bundle to a directory")
    _add_source_args(p)
    p.add_argument("--top", type=int, default=10)
    p.add_argument("--citedness-mode", choices=CITEDNESS_MODES, default="combined")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING
    if args.verbose:
        level = logging.INFO
    if args.quiet:
        level = logging.ERROR
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args, parser)
    except BrokenPipeError:
        return 1
    except (BibcollabError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        reason = getattr(exc, "reason", None)
        if reason:
            payload["reason"] = reason
        print(json.dumps(payload), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
