from __future__ import annotations

import random

import pytest

from helpers import scores_with, stats_from_spectrum
from texcomp import (
    CorpusSummary,
    DocumentResult,
    EmptyResultSetError,
    InsufficientTokensError,
    SubcorpusRow,
    UnknownLabelError,
    Verdict,
    ZeroTokensError,
    aggregate_rows,
    analyze_document,
    compute_scores,
    default_thresholds,
    evaluate,
    summarize,
    trend_check,
)


def make_result(doc_id: str, label: str, tcld: float, tcr: float) -> DocumentResult:
    scores = scores_with(tcld=tcld, tcr=tcr)
    return DocumentResult(
        document_id=doc_id,
        subcorpus=label,
        statistics=stats_from_spectrum({1: 2}),
        scores=scores,
        feedback=evaluate(scores, default_thresholds()),
    )


def test_analyze_document_chains_the_measures():
    result = analyze_document("the cat sat on the mat", document_id="mat")
    assert result.scores.yules_k == pytest.approx(555.5555555555555, abs=1e-9)
    assert result.scores.tcld == pytest.approx(1209.384732376291, abs=1e-6)
    assert result.scores.tcr == 3.0
    assert result.feedback.reliability_flag is True
    assert result.feedback.tcld_verdict is Verdict.ABOVE_MAX
    assert result.scores == compute_scores(result.statistics)


def test_all_distinct_text_scores_zero_diversity():
    text = " ".join(f"w{i}" for i in range(200)) + "."
    result = analyze_document(text, document_id="distinct")
    assert result.scores.yules_k == 0.0
    assert result.scores.maas_a2 == 0.0
    assert result.scores.tcld == 0.0
    assert result.feedback.tcld_verdict is Verdict.BELOW_MIN
    assert result.feedback.reliability_flag is False


def test_empty_document_error_carries_the_id():
    with pytest.raises(ZeroTokensError) as excinfo:
        analyze_document("", document_id="empty.txt")
    assert excinfo.value.document_id == "empty.txt"


def test_one_token_document_error_carries_the_id():
    with pytest.raises(InsufficientTokensError) as excinfo:
        analyze_document("word", document_id="tiny.txt")
    assert excinfo.value.document_id == "tiny.txt"


def test_analysis_is_deterministic():
    text = "The cat sat. The cat ran."
    assert analyze_document(text, document_id="x") == analyze_document(text, document_id="x")


def test_summarize_counts_verdicts_per_subcorpus():
    results = [
        make_result("a1", "A", tcld=100.0, tcr=50.0),  # tcld below
        make_result("a2", "A", tcld=200.0, tcr=50.0),
        make_result("a3", "A", tcld=300.0, tcr=90.0),  # tcld above, tcr above
        make_result("a4", "A", tcld=200.0, tcr=10.0),  # tcr below
        make_result("b1", "B", tcld=200.0, tcr=50.0),
    ]
    summary = summarize(results)
    assert [row.label for row in summary.rows] == ["A", "B"]
    row_a = summary.rows[0]
    assert row_a.count == 4
    assert row_a.mean_tcld == pytest.approx(200.0)
    assert row_a.mean_tcr == pytest.approx(50.0)
    assert row_a.tcld_low_pct == 25.0
    assert row_a.tcld_high_pct == 25.0
    assert row_a.tcr_low_pct == 25.0
    assert row_a.tcr_high_pct == 25.0
    assert summary.average.count == 5
    assert summary.average.mean_tcld == pytest.approx((4 * 200.0 + 200.0) / 5)


def test_summarize_all_within_range_gives_zero_percentages():
    summary = summarize([make_result(f"d{i}", "only", 200.0, 50.0) for i in range(3)])
    row = summary.rows[0]
    assert (row.tcld_low_pct, row.tcld_high_pct, row.tcr_low_pct, row.tcr_high_pct) == (
        0.0,
        0.0,
        0.0,
        0.0,
    )


def test_summary_is_permutation_invariant():
    results = [
        make_result(f"d{i}", "AB"[i % 2], tcld=150.0 + 17.3 * i, tcr=40.0 + 3.1 * i)
        for i in range(12)
    ]
    shuffled = results[:]
    random.Random(7).shuffle(shuffled)
    assert summarize(results) == summarize(shuffled)


def test_verdict_shares_sum_to_one_hundred():
    rng = random.Random(99)
    results = [
        make_result(f"d{i}", "g", tcld=rng.uniform(0, 400), tcr=rng.uniform(0, 120))
        for i in range(37)
    ]
    row = summarize(results).rows[0]
    within_tcld = sum(
        1 for r in results if r.feedback.tcld_verdict is Verdict.WITHIN_RANGE
    )
    within_tcr = sum(1 for r in results if r.feedback.tcr_verdict is Verdict.WITHIN_RANGE)
    assert row.tcld_low_pct + row.tcld_high_pct + 100.0 * within_tcld / 37 == pytest.approx(
        100.0, abs=1e-9
    )
    assert row.tcr_low_pct + row.tcr_high_pct + 100.0 * within_tcr / 37 == pytest.approx(
        100.0, abs=1e-9
    )


def test_summarize_rejects_empty_input():
    with pytest.raises(EmptyResultSetError):
        summarize([])


def test_weighted_average_row():
    rows = [
        SubcorpusRow("T1", 1238, 212.6, 41.4, 5.4, 0.0, 46.2, 0.1),
        SubcorpusRow("T2", 252, 202.5, 45.3, 3.2, 0.8, 29.4, 0.0),
    ]
    average = aggregate_rows(rows)
    assert average.label == "AVG"
    assert average.count == 1490
    assert average.mean_tcld == pytest.approx(210.8918120805369, abs=1e-9)
    assert average.mean_tcr == pytest.approx(42.059597315436235, abs=1e-9)
    # Document-weighted, not the unweighted mean of the two rows (207.55 / 43.35).
    assert average.mean_tcld != pytest.approx((212.6 + 202.5) / 2)


def _summary_from_rows(rows: list[SubcorpusRow]) -> CorpusSummary:
    return CorpusSummary(rows=tuple(rows), average=aggregate_rows(rows))


def test_trend_check_passes_on_clean_ordering():
    summary = _summary_from_rows(
        [
            SubcorpusRow("T1", 1238, 212.6, 41.4, 0, 0, 0, 0),
            SubcorpusRow("T2", 252, 202.5, 45.3, 0, 0, 0, 0),
        ]
    )
    assert trend_check(summary, ["T1", "T2"]) == []


def test_trend_check_flags_a_tcld_rise():
    summary = _summary_from_rows(
        [
            SubcorpusRow("Y2", 767, 181.8, 62.2, 0, 0, 0, 0),
            SubcorpusRow("Y3", 591, 182.1, 62.2, 0, 0, 0, 0),
        ]
    )
    violations = trend_check(summary, ["Y2", "Y3"])
    assert len(violations) == 1
    assert violations[0].measure == "tcld"
    assert (violations[0].from_label, violations[0].to_label) == ("Y2", "Y3")


def test_trend_check_single_label_has_no_pairs():
    summary = _summary_from_rows([SubcorpusRow("solo", 3, 200.0, 50.0, 0, 0, 0, 0)])
    assert trend_check(summary, ["solo"]) == []


def test_trend_check_rejects_unknown_labels():
    summary = _summary_from_rows([SubcorpusRow("known", 3, 200.0, 50.0, 0, 0, 0, 0)])
    with pytest.raises(UnknownLabelError):
        trend_check(summary, ["known", "missing"])
