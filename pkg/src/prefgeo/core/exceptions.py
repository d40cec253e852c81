"""Error types raised by the prefgeo library.

Every error derives from PrefGeoError, itself a ValueError, so callers that
only care about "bad input" can keep catching ValueError.
"""


class PrefGeoError(ValueError):
    """Base class for all library errors."""


class IdenticalCandidates(PrefGeoError):
    """Two candidates given to a pairwise operation share a position."""


class DegenerateInput(PrefGeoError):
    """An operation that requires generic bisectors received a degenerate one."""


class DegenerateDiagonal(PrefGeoError):
    """Two points lie on a common slope +1 or slope -1 line."""


class DuplicateCandidates(PrefGeoError):
    """An embedding places two candidates at the same point."""


class NoStrictGap(PrefGeoError):
    """A voter is equidistant from every candidate pair, so no nudge budget exists."""


class TieError(PrefGeoError):
    """A point is equidistant from two candidates.

    Attributes:
        pair: The tied candidate indices (lowest first).
        voter: Index of the offending voter when the point came from a voter list.
    """

    def __init__(self, pair: tuple[int, int], voter: int | None = None):
        self.pair = pair
        self.voter = voter
        where = f"voter {voter}" if voter is not None else "point"
        super().__init__(f"{where} is equidistant from candidates {pair[0]} and {pair[1]}")


class UnsupportedNorm(PrefGeoError):
    """The requested norm is not meaningful for this operation."""


class SizeMismatch(PrefGeoError):
    """Two profiles range over different candidate counts."""


class ComplexityGuard(PrefGeoError):
    """A brute-force search was refused because it would be too large."""


class WrongArity(PrefGeoError):
    """An operation defined for a fixed candidate count received another."""


class DegenerateEmbedding(PrefGeoError):
    """An embedding is not generic where genericity is required.

    Attributes:
        report: The DegeneracyReport describing the problem, when available.
    """

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)


class MalformedDocument(PrefGeoError):
    """A profile or embedding document does not have the expected shape."""
