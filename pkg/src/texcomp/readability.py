"""Readability indices LIX and RIX and their combination.

Both are computed over the whole text, never a sample, and neither needs
syllable counting. Higher scores mean more complex text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroSentencesError, ZeroTokensError
from .segmentation import TextStatistics


@dataclass(frozen=True)
class ReadabilityScores:
    lix: float
    rix: float
    tcr: float


def lix(stats: TextStatistics) -> float:
    """Lasbarhetsindex: mean sentence length plus long-word percentage.

    LIX = W/S + 100 * LW/W with W = tokens, S = sentences, LW = long words.
    https://en.wikipedia.org/wiki/Lix_(readability_test)
    """
    if stats.token_count == 0:
        raise ZeroTokensError("LIX is undefined for zero tokens")
    if stats.sentence_count == 0:
        raise ZeroSentencesError("LIX is undefined for zero sentences")
    w = stats.token_count
    return w / stats.sentence_count + 100.0 * stats.long_word_count / w


def rix(stats: TextStatistics) -> float:
    """RIX, a simplification of LIX: long words per sentence."""
    if stats.sentence_count == 0:
        raise ZeroSentencesError("RIX is undefined for zero sentences")
    return stats.long_word_count / stats.sentence_count


def tcr(lix_value: float, rix_value: float) -> float:
    """Combined readability score (10 * RIX + LIX) / 2.

    RIX is scaled up because LIX runs roughly ten times larger for the same
    text; the scaling keeps either index from dominating.
    """
    return (10.0 * rix_value + lix_value) / 2.0


def readability_scores(stats: TextStatistics) -> ReadabilityScores:
    """Compute both readability indices and their combination."""
    lix_value = lix(stats)
    rix_value = rix(stats)
    return ReadabilityScores(lix=lix_value, rix=rix_value, tcr=tcr(lix_value, rix_value))
