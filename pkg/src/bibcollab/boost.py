"""Bilateral boost indicators.

The framework asks what adding the bilateral paper set to a country's
indigenous set does to its output and impact:

* productivity boost: percentage growth of the paper count;
* citation boost: percentage growth of the citation sum;
* citedness boost: percentage growth of the cited-paper fraction;
* impact per unit productivity: citation boost / productivity boost;
* impact per unit citedness: citation boost / citedness boost.

Each also carries an advisory label against conventional thresholds
(over-dependence above 20% productivity / 30% impact gain, extreme above
100%; ratios above 1 mark the partnership as rewarding).

All ratios are computed integer-numerator over integer-denominator with
one final division, so uniformly scaling all counts leaves every value
bit-identical.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import (
    ZeroCitednessBoostError,
    ZeroCitednessError,
    ZeroIndigenousCitationsError,
    ZeroIndigenousError,
    ZeroPapersError,
    ZeroProductivityBoostError,
)
from .records import Corpus, corpus_labels

CITEDNESS_MODES = ("combined", "bilateral")


@dataclass(frozen=True)
class BoostInputs:
    """Aggregate counts the boost indicators are computed from.

    ``combined_cited`` is the cited-paper count of the union of the
    indigenous and bilateral sets (the two are disjoint by construction).
    """

    indigenous_papers: int
    bilateral_papers: int
    indigenous_citations: int
    bilateral_citations: int
    indigenous_cited: int
    combined_cited: int

    def __post_init__(self):
        for name in (
            "indigenous_papers",
            "bilateral_papers",
            "indigenous_citations",
            "bilateral_citations",
            "indigenous_cited",
            "combined_cited",
        ):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.indigenous_cited > self.indigenous_papers:
            raise ValueError("indigenous_cited cannot exceed indigenous_papers")
        if not (0 <= self.bilateral_cited <= self.bilateral_papers):
            raise ValueError("combined_cited - indigenous_cited must lie in [0, bilateral_papers]")

    @property
    def bilateral_cited(self) -> int:
        return self.combined_cited - self.indigenous_cited

    @property
    def combined_papers(self) -> int:
        return self.indigenous_papers + self.bilateral_papers

    @classmethod
    def from_corpus(cls, corpus: Corpus, focal: str, partner: str) -> "BoostInputs":
        labels = corpus_labels(corpus, focal, partner)
        cited = corpus.arrays.times_cited
        indigenous = labels == kernels.INDIGENOUS
        bilateral = labels == kernels.BILATERAL
        indigenous_cited = int((cited[indigenous] > 0).sum())
        return cls(
            indigenous_papers=int(indigenous.sum()),
            bilateral_papers=int(bilateral.sum()),
            indigenous_citations=int(cited[indigenous].sum()),
            bilateral_citations=int(cited[bilateral].sum()),
            indigenous_cited=indigenous_cited,
            combined_cited=indigenous_cited + int((cited[bilateral] > 0).sum()),
        )


def productivity_boost(indigenous_papers: int, bilateral_papers: int) -> float:
    """Percentage paper-count growth from adding the bilateral set."""
    if indigenous_papers <= 0:
        raise ZeroIndigenousError("indigenous paper count must be > 0")
    return 100 * bilateral_papers / indigenous_papers


def citation_boost(indigenous_citations: int, bilateral_citations: int) -> float:
    """Percentage citation-sum growth from adding the bilateral set."""
    if indigenous_citations <= 0:
        raise ZeroIndigenousCitationsError("indigenous citation sum must be > 0")
    return 100 * bilateral_citations / indigenous_citations


def impact_per_unit_productivity(citation_boost_pct: float, productivity_boost_pct: float) -> float:
    """Citation boost gained per unit of productivity boost (>1 is rewarding)."""
    if productivity_boost_pct == 0:
        raise ZeroProductivityBoostError("productivity boost is zero")
    return citation_boost_pct / productivity_boost_pct


def citedness_boost(inputs: BoostInputs, mode: str = "combined") -> float:
    """Percentage growth of the cited-paper fraction.

    ``combined`` compares the union's citedness against the indigenous
    citedness. ``bilateral`` compares the bilateral set's own citedness
    instead, which isolates the added papers but is far more volatile.
    """
    if mode not in CITEDNESS_MODES:
        raise ValueError(f"mode must be one of {CITEDNESS_MODES}, got {mode!r}")
    ip = inputs.indigenous_papers
    if ip <= 0:
        raise ZeroPapersError("indigenous paper count must be > 0")
    if inputs.indigenous_cited == 0:
        raise ZeroCitednessError("indigenous cited-paper count is zero")
    if mode == "combined":
        # (combined_cited/combined_papers) / (indigenous_cited/ip) - 1
        numerator = 100 * (inputs.combined_cited * ip - inputs.indigenous_cited * inputs.combined_papers)
        denominator = inputs.indigenous_cited * inputs.combined_papers
    else:
        if inputs.bilateral_papers == 0:
            raise ZeroPapersError("bilateral paper count must be > 0 in bilateral mode")
        # (bilateral_cited/bilateral_papers) / (indigenous_cited/ip) - 1
        numerator = 100 * (inputs.bilateral_cited * ip - inputs.indigenous_cited * inputs.bilateral_papers)
        denominator = inputs.indigenous_cited * inputs.bilateral_papers
    return numerator / denominator


def impact_per_unit_citedness(citation_boost_pct: float, citedness_boost_pct: float) -> float:
    """Citation boost gained per unit of citedness boost."""
    if citedness_boost_pct == 0:
        raise ZeroCitednessBoostError("citedness boost is zero")
    return citation_boost_pct / citedness_boost_pct


def threshold_labels(
    productivity_boost_pct: float,
    citation_boost_pct: float,
    impact_ratio: float | None,
    citedness_boost_pct: float | None,
) -> dict[str, str | None]:
    """Advisory labels; pure functions of the numeric values."""

    def dependence(value: float, considerable_above: float) -> str:
        if value > 100:
            return "extreme"
        if value > considerable_above:
            return "considerable"
        return "low"

    rewarding: str | None = None
    if impact_ratio is not None:
        if impact_ratio > 1:
            rewarding = "rewarding"
        elif impact_ratio < 1:
            rewarding = "less_rewarding"
        else:
            rewarding = "neutral"
    citedness_note: str | None = None
    if citedness_boost_pct is not None:
        citedness_note = "marginal" if citedness_boost_pct < 1 else "substantial"
    return {
        "dependence_productivity": dependence(productivity_boost_pct, 20),
        "dependence_impact": dependence(citation_boost_pct, 30),
        "rewarding": rewarding,
        "citedness_note": citedness_note,
    }


@dataclass(frozen=True)
class BoostReport:
    """Full indicator suite for one (focal, partner) pair.

    Ratio fields are None when their denominator boost is zero; the
    matching ``*_reason`` field says why.
    """

    inputs: BoostInputs
    citedness_mode: str
    productivity_boost_pct: float
    citation_boost_pct: float
    citedness_boost_pct: float | None
    citedness_reason: str | None
    impact_per_unit_productivity: float | None
    impact_per_unit_productivity_reason: str | None
    impact_per_unit_citedness: float | None
    impact_per_unit_citedness_reason: str | None
    labels: dict[str, str | None]


def boost_report(inputs: BoostInputs, citedness_mode: str = "combined") -> BoostReport:
    """Run the whole suite on prepared aggregates."""
    beta_productivity = productivity_boost(inputs.indigenous_papers, inputs.bilateral_papers)
    beta_citation = citation_boost(inputs.indigenous_citations, inputs.bilateral_citations)

    gamma: float | None
    gamma_reason: str | None = None
    try:
        gamma = impact_per_unit_productivity(beta_citation, beta_productivity)
    except ZeroProductivityBoostError as exc:
        gamma, gamma_reason = None, exc.reason

    beta_citedness: float | None
    citedness_reason: str | None = None
    try:
        beta_citedness = citedness_boost(inputs, mode=citedness_mode)
    except (ZeroPapersError, ZeroCitednessError) as exc:
        beta_citedness, citedness_reason = None, exc.reason

    delta: float | None = None
    delta_reason: str | None = None
    if beta_citedness is None:
        delta_reason = citedness_reason
    else:
        try:
            delta = impact_per_unit_citedness(beta_citation, beta_citedness)
        except ZeroCitednessBoostError as exc:
            delta_reason = exc.reason

    return BoostReport(
        inputs=inputs,
        citedness_mode=citedness_mode,
        productivity_boost_pct=beta_productivity,
        citation_boost_pct=beta_citation,
        citedness_boost_pct=beta_citedness,
        citedness_reason=citedness_reason,
        impact_per_unit_productivity=gamma,
        impact_per_unit_productivity_reason=gamma_reason,
        impact_per_unit_citedness=delta,
        impact_per_unit_citedness_reason=delta_reason,
        labels=threshold_labels(beta_productivity, beta_citation, gamma, beta_citedness),
    )


def boost_report_from_corpus(
    corpus: Corpus, focal: str, partner: str, citedness_mode: str = "combined"
) -> BoostReport:
    return boost_report(BoostInputs.from_corpus(corpus, focal, partner), citedness_mode)
