from __future__ import annotations

import itertools
import math
import random

import numpy as np
import pytest

from bibcollab.errors import NoCollaborationsError
from bibcollab.ric import (
    EXCLUSIVE_PARTNER,
    NO_COLLABORATIONS,
    PairwiseCollabTable,
    ric,
    ric_series,
    ric_with_flag,
)

from .conftest import make_corpus, make_record

SYSTEM = ("A", "B", "C", "D", "E", "F")


# -- independent brute-force implementation (the oracle) ---------------------


def brute_pairs(country_sets, system):
    pairs = {}
    for countries in country_sets:
        members = sorted(set(countries) & set(system))
        for a, b in itertools.combinations(members, 2):
            pairs[(a, b)] = pairs.get((a, b), 0) + 1
    return pairs


def brute_ric(country_sets, system, x, y):
    """Direct evaluation: c_xy*(T - C_x) / (C_x*(C_y - c_xy)); None when C_x=0."""
    pairs = brute_pairs(country_sets, system)
    totals = {c: 0 for c in system}
    for (a, b), n in pairs.items():
        totals[a] += n
        totals[b] += n
    t = sum(pairs.values())
    c_xy = pairs.get(tuple(sorted((x, y))), 0)
    if totals[x] == 0:
        return None
    if c_xy == 0:
        return 0.0
    denominator = totals[x] * (totals[y] - c_xy)
    if denominator == 0:
        return math.inf
    return c_xy * (t - totals[x]) / denominator


def random_country_sets(rng, n_records, countries):
    sets = []
    for _ in range(n_records):
        k = rng.randint(1, min(4, len(countries)))
        sets.append(frozenset(rng.sample(countries, k)))
    return sets


def corpus_from_sets(sets):
    return make_corpus(make_record(s, year=2000) for s in sets)


# -- table construction -------------------------------------------------------


class TestPairwiseTable:
    def test_three_country_paper_contributes_three_pairs(self):
        table = PairwiseCollabTable.from_corpus(corpus_from_sets([{"A", "B", "C"}]), SYSTEM)
        assert table.pair_count("A", "B") == 1
        assert table.pair_count("A", "C") == 1
        assert table.pair_count("B", "C") == 1
        assert table.total_pairs == 3

    def test_single_country_paper_contributes_nothing(self):
        table = PairwiseCollabTable.from_corpus(corpus_from_sets([{"A"}]), SYSTEM)
        assert table.counts.sum() == 0

    def test_out_of_system_countries_ignored(self):
        table = PairwiseCollabTable.from_corpus(corpus_from_sets([{"A", "B", "Z"}]), ("A", "B"))
        assert table.pair_count("A", "B") == 1
        assert table.total_pairs == 1

    def test_additivity_over_disjoint_halves(self):
        rng = random.Random(11)
        sets = random_country_sets(rng, 200, list(SYSTEM))
        whole = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), SYSTEM)
        first = PairwiseCollabTable.from_corpus(corpus_from_sets(sets[:100]), SYSTEM)
        second = PairwiseCollabTable.from_corpus(corpus_from_sets(sets[100:]), SYSTEM)
        assert (whole.counts == first.counts + second.counts).all()

    def test_symmetry_and_zero_diagonal(self):
        rng = random.Random(12)
        sets = random_country_sets(rng, 300, list(SYSTEM))
        table = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), SYSTEM)
        assert (table.counts == table.counts.T).all()
        assert (np.diagonal(table.counts) == 0).all()
        row_sum = table.counts.sum()
        assert table.total_pairs * 2 == row_sum

    def test_matches_brute_force_counts(self):
        rng = random.Random(13)
        sets = random_country_sets(rng, 250, list(SYSTEM))
        table = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), SYSTEM)
        expected = brute_pairs(sets, SYSTEM)
        for x, y in itertools.combinations(SYSTEM, 2):
            assert table.pair_count(x, y) == expected.get((x, y), 0)

    def test_window_restricts_years(self):
        records = [
            make_record({"A", "B"}, year=1995),
            make_record({"A", "B"}, year=2005),
        ]
        table = PairwiseCollabTable.from_corpus(make_corpus(records), ("A", "B"), window=(2000, 2010))
        assert table.pair_count("A", "B") == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            PairwiseCollabTable(countries=("A", "B"), counts=np.array([[0, 1], [2, 0]], dtype=np.int64))
        with pytest.raises(ValueError):
            PairwiseCollabTable(countries=("A", "B"), counts=np.array([[1, 2], [2, 0]], dtype=np.int64))
        with pytest.raises(ValueError):
            PairwiseCollabTable(countries=("A", "A"), counts=np.zeros((2, 2), dtype=np.int64))

    def test_csv_round_trip(self, tmp_path):
        table = PairwiseCollabTable.from_pairs(("A", "B", "C"), {("A", "B"): 2, ("A", "C"): 1})
        path = tmp_path / "pairs.csv"
        table.to_csv(path)
        loaded = PairwiseCollabTable.from_csv(path)
        assert loaded.countries == table.countries
        assert (loaded.counts == table.counts).all()


# -- the ratio ----------------------------------------------------------------


class TestRic:
    def hand_table(self):
        return PairwiseCollabTable.from_pairs(
            ("A", "B", "C"), {("A", "B"): 2, ("A", "C"): 1, ("B", "C"): 1}
        )

    def test_hand_case_exact(self):
        table = self.hand_table()
        assert table.total_pairs == 4
        assert table.row_total("A") == 3
        assert ric(table, "A", "B") == 2 / 3

    def test_hand_case_symmetric_counts(self):
        assert ric(self.hand_table(), "B", "A") == 2 / 3

    def test_zero_pair_count_is_zero(self):
        table = PairwiseCollabTable.from_pairs(("A", "B", "C"), {("A", "B"): 3, ("B", "C"): 2})
        assert ric(table, "A", "C") == 0.0

    def test_asymmetry(self):
        table = PairwiseCollabTable.from_pairs(
            ("A", "B", "C"), {("A", "B"): 2, ("A", "C"): 2, ("B", "C"): 1}
        )
        assert ric(table, "A", "B") == 0.5
        assert ric(table, "B", "A") == 2 / 3

    def test_no_collaborations_raises(self):
        table = PairwiseCollabTable.from_pairs(("A", "B", "C"), {("B", "C"): 2})
        with pytest.raises(NoCollaborationsError):
            ric(table, "A", "B")

    def test_exclusive_partner_is_inf_with_flag(self):
        table = PairwiseCollabTable.from_pairs(("A", "B", "C"), {("A", "B"): 3, ("A", "C"): 1})
        assert math.isinf(ric(table, "A", "B"))
        value, flag = ric_with_flag(table, "A", "B")
        assert math.isinf(value) and flag == EXCLUSIVE_PARTNER

    def test_same_country_rejected(self):
        with pytest.raises(ValueError):
            ric(self.hand_table(), "A", "A")

    def test_unknown_country_rejected(self):
        with pytest.raises(KeyError):
            ric(self.hand_table(), "A", "Z")

    def test_matches_brute_force_on_random_corpora(self):
        rng = random.Random(99)
        for trial in range(30):
            n_countries = rng.randint(2, 6)
            system = list(SYSTEM[:n_countries])
            sets = random_country_sets(rng, rng.randint(1, 400), system)
            table = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), system)
            for x, y in itertools.permutations(system, 2):
                expected = brute_ric(sets, system, x, y)
                got, _ = ric_with_flag(table, x, y)
                if expected is None:
                    assert got is None
                elif math.isinf(expected):
                    assert math.isinf(got)
                else:
                    assert got == pytest.approx(expected, rel=1e-12, abs=0)

    def test_duplicating_corpus_leaves_ric_bit_identical(self):
        rng = random.Random(101)
        sets = random_country_sets(rng, 150, list(SYSTEM))
        single = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), SYSTEM)
        doubled = PairwiseCollabTable.from_corpus(corpus_from_sets(sets + sets), SYSTEM)
        for x, y in itertools.permutations(SYSTEM, 2):
            a = ric_with_flag(single, x, y)
            b = ric_with_flag(doubled, x, y)
            assert a == b

    def test_zero_iff_no_pair(self):
        rng = random.Random(77)
        sets = random_country_sets(rng, 120, list(SYSTEM[:4]))
        system = SYSTEM[:4]
        table = PairwiseCollabTable.from_corpus(corpus_from_sets(sets), system)
        for x, y in itertools.permutations(system, 2):
            value, flag = ric_with_flag(table, x, y)
            if value is None:
                continue
            assert (value == 0.0) == (table.pair_count(x, y) == 0)


# -- time series --------------------------------------------------------------


class TestRicSeries:
    def records(self):
        return [
            make_record({"A", "B"}, year=2000),
            make_record({"A", "C"}, year=2000),
            make_record({"B", "C"}, year=2000),
            make_record({"A", "B"}, year=2001),
            make_record({"A", "B", "C"}, year=2002),
        ]

    def test_single_year_equals_table_ric(self):
        corpus = make_corpus(r for r in self.records() if r.year == 2000)
        series = ric_series(corpus, "A", ["B"], mode="yearly", system=("A", "B", "C"))
        assert len(series.points) == 1
        table = PairwiseCollabTable.from_corpus(corpus, ("A", "B", "C"))
        assert series.points[0].value == ric(table, "A", "B")

    def test_yearly_matches_per_year_tables(self):
        corpus = make_corpus(self.records())
        series = ric_series(corpus, "A", ["B", "C"], mode="yearly", system=("A", "B", "C"))
        for point in series.points:
            table = PairwiseCollabTable.from_corpus(
                corpus, ("A", "B", "C"), window=(point.year, point.year)
            )
            assert (point.value, point.flag) == ric_with_flag(table, "A", point.partner)

    def test_cumulative_matches_expanding_windows(self):
        corpus = make_corpus(self.records())
        series = ric_series(corpus, "A", ["B", "C"], mode="cumulative", system=("A", "B", "C"))
        for point in series.points:
            table = PairwiseCollabTable.from_corpus(corpus, ("A", "B", "C"), window=(2000, point.year))
            assert (point.value, point.flag) == ric_with_flag(table, "A", point.partner)

    def test_absent_partner_is_all_zero(self):
        corpus = make_corpus(self.records())
        series = ric_series(corpus, "A", ["D"], system=("A", "B", "C", "D"))
        assert all(p.value == 0.0 for p in series.points)

    def test_undefined_years_flagged(self):
        records = [make_record({"A"}, year=2000), make_record({"A", "B"}, year=2001)]
        series = ric_series(make_corpus(records), "A", ["B"], mode="yearly")
        assert series.points[0].value is None
        assert series.points[0].flag == NO_COLLABORATIONS
        assert series.points[1].flag == EXCLUSIVE_PARTNER

    def test_focal_must_be_in_system(self):
        corpus = make_corpus(self.records())
        with pytest.raises(ValueError):
            ric_series(corpus, "A", ["B"], system=("B", "C"))

    def test_focal_cannot_be_partner(self):
        corpus = make_corpus(self.records())
        with pytest.raises(ValueError):
            ric_series(corpus, "A", ["A"])
