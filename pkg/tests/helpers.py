"""Shared builders for synthetic texts and hand-made statistics."""

from __future__ import annotations

import random

from texcomp import ComplexityScores, TextStatistics

SHORT_WORDS = ["a", "to", "the", "cat", "sun", "of", "we", "ran", "mat", "dog", "it", "on"]
LONG_WORDS = [
    "considerable",
    "framework",
    "socioeconomic",
    "attention",
    "prominent",
    "necessary",
    "analysis",
    "different",
]


def make_text(
    rng: random.Random,
    *,
    min_tokens: int = 10,
    max_tokens: int = 120,
    vocab_size: int | None = None,
    sentence_prob: float = 0.12,
) -> str:
    """A random text with sentence breaks and a tunable repetition level.

    With ``vocab_size`` set, tokens are drawn from that many distinct words,
    which controls how repetitive the spectrum gets.
    """
    n = rng.randint(min_tokens, max_tokens)
    if vocab_size is None:
        vocab = SHORT_WORDS + LONG_WORDS
    else:
        vocab = [f"w{i}" for i in range(1, vocab_size + 1)]
    parts = []
    for i in range(n):
        parts.append(rng.choice(vocab))
        if i < n - 1 and rng.random() < sentence_prob:
            parts[-1] += "."
    return " ".join(parts) + "."


def duplicate_with_break(text: str) -> str:
    """Concatenate a text with itself across a sentence break."""
    return text + ". " + text


def stats_from_spectrum(
    spectrum: dict[int, int], *, sentence_count: int = 1, long_word_count: int = 0
) -> TextStatistics:
    """Build TextStatistics straight from a frequency spectrum."""
    return TextStatistics(
        token_count=sum(i * v for i, v in spectrum.items()),
        type_count=sum(spectrum.values()),
        sentence_count=sentence_count,
        long_word_count=long_word_count,
        frequency_spectrum=dict(spectrum),
    )


def scores_with(tcld: float, tcr: float) -> ComplexityScores:
    """A score bundle where only the two combined scores matter."""
    return ComplexityScores(
        yules_k=0.0, maas_a2=0.0, tcld=tcld, ttr=1.0, lix=0.0, rix=0.0, tcr=tcr
    )
