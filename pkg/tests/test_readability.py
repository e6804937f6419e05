from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import duplicate_with_break, make_text, stats_from_spectrum
from texcomp import (
    TextStatistics,
    ZeroSentencesError,
    ZeroTokensError,
    compute_statistics,
    lix,
    readability_scores,
    rix,
    tcr,
)

nonneg = st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False)


def test_lix_no_long_words():
    assert lix(compute_statistics("The cat sat on the mat.")) == 6.0


def test_lix_all_long_words():
    stats = compute_statistics("Considerable complexity characterizes readability formulas.")
    assert lix(stats) == 105.0


def test_lix_single_token():
    assert lix(compute_statistics("A.")) == 1.0


def test_rix_values():
    assert rix(compute_statistics("The cat sat on the mat.")) == 0.0
    assert rix(
        compute_statistics("Considerable complexity characterizes readability formulas.")
    ) == 5.0
    assert rix(stats_from_spectrum({1: 20}, sentence_count=2, long_word_count=16)) == 8.0


def test_tcr_arithmetic():
    assert tcr(6.0, 0.0) == 3.0
    assert tcr(105.0, 5.0) == 77.5
    assert tcr(50.0, 5.0) == 50.0


def test_lix_error_paths():
    with pytest.raises(ZeroTokensError):
        lix(TextStatistics(0, 0, 0, 0, {}))
    with pytest.raises(ZeroSentencesError):
        lix(TextStatistics(3, 3, 0, 0, {1: 3}))


def test_rix_error_path():
    with pytest.raises(ZeroSentencesError):
        rix(TextStatistics(3, 3, 0, 0, {1: 3}))


@given(seed=st.integers(min_value=0, max_value=10_000))
def test_duplication_leaves_lix_and_rix_unchanged(seed):
    rng = random.Random(seed)
    text = make_text(rng)
    single = compute_statistics(text)
    double = compute_statistics(duplicate_with_break(text))
    assert lix(double) == lix(single)
    assert rix(double) == rix(single)


@given(seed=st.integers(min_value=0, max_value=10_000))
def test_lengthening_one_token_raises_all_three(seed):
    rng = random.Random(seed)
    tokens = [rng.choice(["a", "of", "we", "cat"]) for _ in range(rng.randint(3, 30))]
    text = " ".join(tokens) + "."
    swapped = " ".join(["socioeconomic"] + tokens[1:]) + "."
    before = readability_scores(compute_statistics(text))
    after = readability_scores(compute_statistics(swapped))
    assert after.lix > before.lix
    assert after.rix > before.rix
    assert after.tcr > before.tcr


@given(lix_a=nonneg, lix_b=nonneg, rix_a=nonneg, rix_b=nonneg)
def test_tcr_is_monotone_and_linear(lix_a, lix_b, rix_a, rix_b):
    if lix_a <= lix_b and rix_a <= rix_b:
        assert tcr(lix_a, rix_a) <= tcr(lix_b, rix_b)
    assert tcr(lix_a + lix_b, rix_a + rix_b) == pytest.approx(
        tcr(lix_a, rix_a) + tcr(lix_b, rix_b), rel=1e-9
    )


def test_scores_bundle_matches_parts():
    stats = compute_statistics("Considerable complexity characterizes readability formulas.")
    bundle = readability_scores(stats)
    assert bundle.lix == lix(stats)
    assert bundle.rix == rix(stats)
    assert bundle.tcr == tcr(bundle.lix, bundle.rix)
