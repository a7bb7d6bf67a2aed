from __future__ import annotations

from pathlib import Path

import pytest

from bibcollab.records import Corpus, DocType, PublicationRecord

DATA_DIR = Path(__file__).parent / "data"

# filled by test_acceptance; echoed after the run so the lines survive capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_record(
    countries,
    year: int = 2000,
    times_cited: int = 0,
    doi: str | None = None,
    categories=(),
    doc_type: DocType = DocType.ARTICLE,
    first_author_country: str | None = None,
) -> PublicationRecord:
    return PublicationRecord(
        year=year,
        doc_type=doc_type,
        language="English",
        countries=frozenset(countries),
        categories=frozenset(categories),
        times_cited=times_cited,
        doi=doi,
        first_author_country=first_author_country,
    )


def make_corpus(records) -> Corpus:
    return Corpus(records=tuple(records))


@pytest.fixture(scope="session")
def fixture_five_tagged() -> Path:
    return DATA_DIR / "fixture_five.txt"


@pytest.fixture(scope="session")
def fixture_five_tsv() -> Path:
    return DATA_DIR / "fixture_five.tsv"
