from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bibcollab.boost import (
    BoostInputs,
    boost_report,
    boost_report_from_corpus,
    citation_boost,
    citedness_boost,
    impact_per_unit_citedness,
    impact_per_unit_productivity,
    productivity_boost,
    threshold_labels,
)
from bibcollab.emit import round_half_up
from bibcollab.errors import (
    ZeroCitednessBoostError,
    ZeroCitednessError,
    ZeroIndigenousCitationsError,
    ZeroIndigenousError,
    ZeroPapersError,
    ZeroProductivityBoostError,
)
from bibcollab.records import Label, classify

from .conftest import make_corpus, make_record

# Reference aggregates for a full-scale corpus, frozen as fixture inputs.
FIXTURE = BoostInputs(
    indigenous_papers=648475,
    bilateral_papers=69243,
    indigenous_citations=9692229,
    bilateral_citations=11869018 - 9692229,
    indigenous_cited=556149,
    combined_cited=617727,
)


class TestProductivityBoost:
    def test_fixture_value(self):
        assert round_half_up(productivity_boost(648475, 69243), 1) == 10.7

    def test_no_bilateral(self):
        assert productivity_boost(1000, 0) == 0.0

    def test_hand_value(self):
        assert productivity_boost(100, 50) == 50.0

    def test_zero_indigenous(self):
        with pytest.raises(ZeroIndigenousError):
            productivity_boost(0, 10)

    def test_growth_form_identity(self):
        # ((ip + ib)/ip - 1)*100 must equal the simplified 100*ib/ip
        ip, ib = 648475, 69243
        assert productivity_boost(ip, ib) == pytest.approx(((ip + ib) / ip - 1) * 100, rel=1e-12)


class TestCitationBoost:
    def test_fixture_value(self):
        assert round_half_up(citation_boost(9692229, 2176789), 1) == 22.5

    def test_no_bilateral_citations(self):
        assert citation_boost(1000, 0) == 0.0

    def test_hand_value(self):
        assert citation_boost(1000, 300) == 30.0

    def test_zero_indigenous_citations(self):
        with pytest.raises(ZeroIndigenousCitationsError):
            citation_boost(0, 10)

    def test_growth_form_identity(self):
        ic, icus = 9692229, 2176789
        assert citation_boost(ic, icus) == pytest.approx(((ic + icus) / ic - 1) * 100, rel=1e-12)


class TestImpactPerUnitProductivity:
    def test_rounded_fixture(self):
        assert round_half_up(impact_per_unit_productivity(22.5, 10.7), 1) == 2.1

    def test_unrounded_fixture(self):
        assert round_half_up(impact_per_unit_productivity(22.4591, 10.6786), 3) == 2.103

    def test_boundary(self):
        assert impact_per_unit_productivity(5.0, 5.0) == 1.0

    def test_zero_productivity_boost(self):
        with pytest.raises(ZeroProductivityBoostError):
            impact_per_unit_productivity(10.0, 0.0)


class TestCitednessBoost:
    def test_fixture_value(self):
        assert round_half_up(citedness_boost(FIXTURE), 2) == 0.36

    def test_identical_citedness_is_zero(self):
        inputs = BoostInputs(100, 50, 500, 200, 80, 120)  # 80/100 == 120/150
        assert citedness_boost(inputs) == 0.0

    def test_hand_value(self):
        # combined citedness 0.9 vs indigenous 0.8 -> 12.5%
        inputs = BoostInputs(100, 100, 1, 1, 80, 180)
        assert citedness_boost(inputs) == 12.5

    def test_bilateral_mode(self):
        # bilateral citedness 61578/69243 vs indigenous 556149/648475
        value = citedness_boost(FIXTURE, mode="bilateral")
        assert round_half_up(value, 2) == 3.69

    def test_zero_indigenous_papers(self):
        with pytest.raises(ZeroPapersError):
            citedness_boost(BoostInputs(0, 0, 0, 0, 0, 0))

    def test_zero_indigenous_citedness(self):
        with pytest.raises(ZeroCitednessError):
            citedness_boost(BoostInputs(10, 5, 0, 3, 0, 4))

    def test_bilateral_mode_requires_bilateral_papers(self):
        with pytest.raises(ZeroPapersError):
            citedness_boost(BoostInputs(10, 0, 5, 0, 5, 5), mode="bilateral")

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            citedness_boost(FIXTURE, mode="nonsense")


class TestImpactPerUnitCitedness:
    def test_fixture_value(self):
        value = impact_per_unit_citedness(citation_boost(9692229, 2176789), citedness_boost(FIXTURE))
        assert abs(value - 63.03) < 0.5

    def test_boundary(self):
        assert impact_per_unit_citedness(4.0, 4.0) == 1.0

    def test_hand_value(self):
        assert impact_per_unit_citedness(30.0, 2.0) == 15.0

    def test_zero_citedness_boost(self):
        with pytest.raises(ZeroCitednessBoostError):
            impact_per_unit_citedness(10.0, 0.0)


class TestThresholdLabels:
    def test_fixture_labels(self):
        labels = threshold_labels(10.7, 22.5, 2.1, 0.36)
        assert labels == {
            "dependence_productivity": "low",
            "dependence_impact": "low",
            "rewarding": "rewarding",
            "citedness_note": "marginal",
        }

    def test_considerable_and_extreme(self):
        assert threshold_labels(25.0, 45.0, 1.5, 2.0) == {
            "dependence_productivity": "considerable",
            "dependence_impact": "considerable",
            "rewarding": "rewarding",
            "citedness_note": "substantial",
        }
        assert threshold_labels(150.0, 120.0, 0.5, 2.0)["dependence_productivity"] == "extreme"
        assert threshold_labels(150.0, 120.0, 0.5, 2.0)["dependence_impact"] == "extreme"
        assert threshold_labels(150.0, 120.0, 0.5, 2.0)["rewarding"] == "less_rewarding"

    def test_boundaries_are_exclusive(self):
        labels = threshold_labels(20.0, 30.0, 1.0, 1.0)
        assert labels["dependence_productivity"] == "low"
        assert labels["dependence_impact"] == "low"
        assert labels["rewarding"] == "neutral"
        assert labels["citedness_note"] == "substantial"

    def test_none_ratios(self):
        labels = threshold_labels(0.0, 0.0, None, None)
        assert labels["rewarding"] is None and labels["citedness_note"] is None


class TestBoostReport:
    def test_identities_hold(self):
        report = boost_report(FIXTURE)
        assert report.impact_per_unit_productivity * report.productivity_boost_pct == pytest.approx(
            report.citation_boost_pct, rel=1e-9
        )
        assert report.impact_per_unit_citedness * report.citedness_boost_pct == pytest.approx(
            report.citation_boost_pct, rel=1e-9
        )

    def test_simplified_equals_growth_form(self):
        report = boost_report(FIXTURE)
        ip, ib = FIXTURE.indigenous_papers, FIXTURE.bilateral_papers
        ic, icus = FIXTURE.indigenous_citations, FIXTURE.bilateral_citations
        assert report.productivity_boost_pct == pytest.approx(100 * ((ip + ib) / ip - 1), rel=1e-12)
        assert report.citation_boost_pct == pytest.approx(100 * ((ic + icus) / ic - 1), rel=1e-12)

    def test_all_zero_bilateral(self):
        inputs = BoostInputs(100, 0, 400, 0, 90, 90)
        report = boost_report(inputs)
        assert report.productivity_boost_pct == 0.0
        assert report.citation_boost_pct == 0.0
        assert report.citedness_boost_pct == 0.0
        assert report.impact_per_unit_productivity is None
        assert report.impact_per_unit_productivity_reason == "zero_productivity_boost"
        assert report.impact_per_unit_citedness is None
        assert report.impact_per_unit_citedness_reason == "zero_citedness_boost"

    @given(
        st.integers(min_value=1, max_value=10**6),
        st.integers(min_value=0, max_value=10**6),
        st.integers(min_value=1, max_value=10**7),
        st.integers(min_value=0, max_value=10**7),
        st.data(),
        st.integers(min_value=2, max_value=9),
    )
    def test_uniform_scaling_invariance(self, ip, ib, ic, icus, data, k):
        ip_cited = data.draw(st.integers(min_value=1, max_value=ip))
        ib_cited = data.draw(st.integers(min_value=0, max_value=ib))
        inputs = BoostInputs(ip, ib, ic, icus, ip_cited, ip_cited + ib_cited)
        scaled = BoostInputs(ip * k, ib * k, ic * k, icus * k, ip_cited * k, (ip_cited + ib_cited) * k)
        a, b = boost_report(inputs), boost_report(scaled)
        assert a.productivity_boost_pct == b.productivity_boost_pct
        assert a.citation_boost_pct == b.citation_boost_pct
        assert a.citedness_boost_pct == b.citedness_boost_pct
        assert a.impact_per_unit_productivity == b.impact_per_unit_productivity
        assert a.impact_per_unit_citedness == b.impact_per_unit_citedness
        assert a.labels == b.labels

    def test_from_corpus_matches_brute_force(self):
        rng = random.Random(21)
        pool = ["USA", "Japan", "Germany"]
        records = []
        for i in range(400):
            countries = {"India"}
            if rng.random() < 0.5:
                countries.update(rng.sample(pool, rng.randint(1, 2)))
            records.append(
                make_record(countries, year=2000, times_cited=rng.choice([0, 0, 2, 9]), doi=f"10.3/{i}")
            )
        corpus = make_corpus(records)
        report = boost_report_from_corpus(corpus, "India", "USA")

        indigenous = [r for r in records if classify(r, "India", "USA") is Label.INDIGENOUS]
        bilateral = [r for r in records if classify(r, "India", "USA") is Label.BILATERAL_PARTNER]
        assert report.inputs.indigenous_papers == len(indigenous)
        assert report.inputs.bilateral_papers == len(bilateral)
        assert report.inputs.indigenous_citations == sum(r.times_cited for r in indigenous)
        assert report.inputs.bilateral_citations == sum(r.times_cited for r in bilateral)
        assert report.inputs.indigenous_cited == sum(1 for r in indigenous if r.times_cited)
        assert report.inputs.combined_cited == sum(
            1 for r in indigenous + bilateral if r.times_cited
        )


class TestBoostInputsValidation:
    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            BoostInputs(-1, 0, 0, 0, 0, 0)

    def test_cited_exceeding_papers_rejected(self):
        with pytest.raises(ValueError):
            BoostInputs(10, 0, 0, 0, 11, 11)

    def test_combined_cited_bounds(self):
        with pytest.raises(ValueError):
            BoostInputs(10, 5, 0, 0, 8, 14)  # bilateral_cited would be 6 > 5
        with pytest.raises(ValueError):
            BoostInputs(10, 5, 0, 0, 8, 7)  # bilateral_cited would be negative
