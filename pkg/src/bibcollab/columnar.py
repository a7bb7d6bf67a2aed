"""Columnar packing of a corpus for the counting kernels.

Country sets are flattened into a CSR-style layout: ``offsets[i]`` ..
``offsets[i+1]`` delimit record *i*'s slice of ``country_ids``. Tokens
within a record are sorted so the packing is deterministic regardless of
set iteration order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .records import Corpus


@dataclass(frozen=True, eq=False)
class CorpusArrays:
    years: np.ndarray          # int32, shape (n,)
    times_cited: np.ndarray    # int64, shape (n,)
    offsets: np.ndarray        # int64, shape (n+1,)
    country_ids: np.ndarray    # int32, shape (nnz,)
    first_author_ids: np.ndarray  # int32, shape (n,), -1 when unresolved
    vocab: dict[str, int]      # canonical country -> id
    countries: tuple[str, ...]  # id -> canonical country

    @property
    def n_records(self) -> int:
        return len(self.years)


def build_arrays(corpus: Corpus) -> CorpusArrays:
    records = corpus.records
    n = len(records)

    vocab: dict[str, int] = {}
    for name in sorted({c for r in records for c in r.countries}):
        vocab[name] = len(vocab)

    years = np.empty(n, dtype=np.int32)
    cited = np.empty(n, dtype=np.int64)
    offsets = np.empty(n + 1, dtype=np.int64)
    first_author = np.full(n, -1, dtype=np.int32)
    flat: list[int] = []

    offsets[0] = 0
    for i, record in enumerate(records):
        years[i] = record.year
        cited[i] = record.times_cited
        for name in sorted(record.countries):
            flat.append(vocab[name])
        offsets[i + 1] = len(flat)
        if record.first_author_country is not None:
            first_author[i] = vocab[record.first_author_country]

    country_ids = np.asarray(flat, dtype=np.int32) if flat else np.empty(0, dtype=np.int32)
    return CorpusArrays(
        years=years,
        times_cited=cited,
        offsets=offsets,
        country_ids=country_ids,
        first_author_ids=first_author,
        vocab=vocab,
        countries=tuple(sorted(vocab, key=vocab.get)),
    )
