"""Exception types raised across the package."""

from __future__ import annotations


class TexcompError(Exception):
    """Base class for all texcomp errors.

    ``document_id`` identifies the offending document in batch runs; the
    corpus layer attaches it when an analysis fails.
    """

    def __init__(self, message: str, document_id: str | None = None):
        super().__init__(message)
        self.document_id = document_id


class ZeroTokensError(TexcompError):
    """The text contains no tokens; every formula divides by the token count."""


class ZeroSentencesError(TexcompError):
    """The text contains no sentences; LIX and RIX divide by the sentence count."""


class InsufficientTokensError(TexcompError):
    """Fewer tokens than a lexical-diversity measure needs (minimum two)."""


class EmptyTrainingSetError(TexcompError):
    """Calibration was given no training scores."""


class InvalidPercentilePairError(TexcompError):
    """Calibration percentiles must satisfy 0 <= p_low < p_high <= 100."""


class EmptyResultSetError(TexcompError):
    """A corpus summary was requested over no document results."""


class UnknownLabelError(TexcompError):
    """A trend-check label does not match any subcorpus in the summary."""


class ManifestError(TexcompError):
    """A batch manifest could not be parsed or failed validation."""


class ProfileError(TexcompError):
    """A threshold-profile file could not be parsed or failed validation."""
