"""Exception types shared across the package."""


class BibcollabError(Exception):
    """Base class for all bibcollab errors."""


class FocalAbsentError(BibcollabError):
    """A record (or corpus) does not contain the focal country."""


class MalformedBlockError(BibcollabError):
    """Field-tagged input violates the PT...ER block structure."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class HeaderMissingError(BibcollabError):
    """Tab-delimited input has no usable tag header row."""


class InvalidSpecError(BibcollabError):
    """Synthetic-corpus spec failed validation."""


class IndicatorUndefinedError(BibcollabError):
    """An indicator cannot be computed; ``reason`` names the failed precondition."""

    reason = "undefined"


class ZeroBaseError(IndicatorUndefinedError):
    reason = "zero_base"


class NonPositivePeriodsError(IndicatorUndefinedError):
    reason = "non_positive_periods"


class ZeroIndigenousError(IndicatorUndefinedError):
    reason = "zero_indigenous_papers"


class ZeroIndigenousCitationsError(IndicatorUndefinedError):
    reason = "zero_indigenous_citations"


class ZeroProductivityBoostError(IndicatorUndefinedError):
    reason = "zero_productivity_boost"


class ZeroPapersError(IndicatorUndefinedError):
    reason = "zero_papers"


class ZeroCitednessError(IndicatorUndefinedError):
    reason = "zero_citedness"


class ZeroCitednessBoostError(IndicatorUndefinedError):
    reason = "zero_citedness_boost"


class NoCollaborationsError(IndicatorUndefinedError):
    reason = "no_collaborations"
