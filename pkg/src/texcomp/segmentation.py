"""Tokenization, sentence counting, and the per-document count summary.

The rules are deliberately simple and deterministic so that every score built
on top of them is reproducible across platforms:

- a token is a maximal run of Unicode letters or digits, optionally joined by
  single internal apostrophes or hyphens ("risk-prone" and "it's" are one
  token each; "a--b" is two);
- sentences are delimited by runs of '.', '!' and '?', where a run counts
  once, and only segments containing at least one token count (so "Dr. Smith"
  over-splits - a known limitation - while a bare "..." adds nothing);
- token length is the number of Unicode scalar values after case folding.

All functions here are pure and safe to call from multiple threads.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .errors import ZeroTokensError

# [^\W_] is \w minus the underscore: any Unicode letter or digit.
_TOKEN = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")
_SENTENCE_BREAK = re.compile(r"[.!?]+")


@dataclass(frozen=True)
class SegmentationConfig:
    """Knobs shared by the segmentation pass and downstream thresholds.

    ``long_word_min_chars`` defaults to 7, i.e. "long" means strictly more
    than 6 characters. ``min_tokens_for_ld`` is the length under which
    lexical-diversity scores are flagged unreliable rather than refused.
    """

    long_word_min_chars: int = 7
    min_tokens_for_ld: int = 100
    case_fold: bool = True

    def __post_init__(self):
        if self.long_word_min_chars < 1:
            raise ValueError("long_word_min_chars must be >= 1")
        if self.min_tokens_for_ld < 1:
            raise ValueError("min_tokens_for_ld must be >= 1")


@dataclass(frozen=True)
class TextStatistics:
    """Counts and frequency spectrum for one document.

    ``frequency_spectrum`` maps an occurrence count i to the number of types
    occurring exactly i times, so sum(i * V_i) equals ``token_count`` and
    sum(V_i) equals ``type_count``.
    """

    token_count: int
    type_count: int
    sentence_count: int
    long_word_count: int
    frequency_spectrum: dict[int, int]


def tokenize(text: str, config: SegmentationConfig = SegmentationConfig()) -> list[str]:
    """Split text into word tokens, lower-cased when ``config.case_fold`` is set.

    Empty input yields an empty list. Digits count as word characters, so
    numeric tokens are words like any other.
    """
    tokens = _TOKEN.findall(text)
    if config.case_fold:
        tokens = [t.lower() for t in tokens]
    return tokens


def split_sentences(text: str) -> int:
    """Count sentences: segments between terminator runs that hold >= 1 token."""
    return sum(1 for segment in _SENTENCE_BREAK.split(text) if _TOKEN.search(segment))


def compute_statistics(
    text: str, config: SegmentationConfig = SegmentationConfig()
) -> TextStatistics:
    """Tokenize, count sentences, and build the frequency spectrum in one pass.

    Raises ZeroTokensError when the text has no tokens; downstream formulas
    divide by both the token and the sentence count.
    """
    tokens = tokenize(text, config)
    if not tokens:
        raise ZeroTokensError("text contains no tokens")
    type_counts = Counter(tokens)
    spectrum = Counter(type_counts.values())
    long_words = sum(1 for t in tokens if len(t) >= config.long_word_min_chars)
    return TextStatistics(
        token_count=len(tokens),
        type_count=len(type_counts),
        sentence_count=split_sentences(text),
        long_word_count=long_words,
        frequency_spectrum=dict(spectrum),
    )
