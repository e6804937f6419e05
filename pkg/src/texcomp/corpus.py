"""Batch analysis of document collections grouped into subcorpora."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyResultSetError, TexcompError, UnknownLabelError
from .feedback import FeedbackReport, ThresholdProfile, Verdict, default_thresholds, evaluate
from .lexical_diversity import MaasConfig
from .scores import ComplexityScores, compute_scores
from .segmentation import SegmentationConfig, TextStatistics, compute_statistics

AVERAGE_LABEL = "AVG"


@dataclass(frozen=True)
class DocumentResult:
    document_id: str
    subcorpus: str
    statistics: TextStatistics
    scores: ComplexityScores
    feedback: FeedbackReport


@dataclass(frozen=True)
class SubcorpusRow:
    """One summary row: document-mean scores and beyond-threshold percentages."""

    label: str
    count: int
    mean_tcld: float
    mean_tcr: float
    tcld_low_pct: float
    tcld_high_pct: float
    tcr_low_pct: float
    tcr_high_pct: float


@dataclass(frozen=True)
class CorpusSummary:
    rows: tuple[SubcorpusRow, ...]
    average: SubcorpusRow


@dataclass(frozen=True)
class TrendViolation:
    measure: str
    from_label: str
    to_label: str
    from_value: float
    to_value: float


def analyze_document(
    text: str,
    *,
    document_id: str,
    subcorpus: str = "",
    seg_config: SegmentationConfig | None = None,
    maas_config: MaasConfig | None = None,
    profile: ThresholdProfile | None = None,
) -> DocumentResult:
    """Run the full measurement pipeline on one document.

    Analysis errors are re-raised with ``document_id`` attached so batch
    callers can report which file failed without aborting the run.
    """
    seg_config = seg_config or SegmentationConfig()
    maas_config = maas_config or MaasConfig()
    profile = profile or default_thresholds()
    try:
        stats = compute_statistics(text, seg_config)
        scores = compute_scores(stats, maas_config)
    except TexcompError as err:
        err.document_id = document_id
        raise
    report = evaluate(
        scores,
        profile,
        reliability_flag=stats.token_count < seg_config.min_tokens_for_ld,
    )
    return DocumentResult(
        document_id=document_id,
        subcorpus=subcorpus,
        statistics=stats,
        scores=scores,
        feedback=report,
    )


def aggregate_rows(rows: Sequence[SubcorpusRow]) -> SubcorpusRow:
    """Document-weighted average row over per-subcorpus rows.

    Weighting by document count makes the corpus average equal to the direct
    mean over all documents, not the unweighted mean of subcorpus means.
    """
    total = sum(row.count for row in rows)
    if total == 0:
        raise EmptyResultSetError("cannot aggregate rows covering zero documents")

    def weighted(value_of) -> float:
        return sum(row.count * value_of(row) for row in rows) / total

    return SubcorpusRow(
        label=AVERAGE_LABEL,
        count=total,
        mean_tcld=weighted(lambda r: r.mean_tcld),
        mean_tcr=weighted(lambda r: r.mean_tcr),
        tcld_low_pct=weighted(lambda r: r.tcld_low_pct),
        tcld_high_pct=weighted(lambda r: r.tcld_high_pct),
        tcr_low_pct=weighted(lambda r: r.tcr_low_pct),
        tcr_high_pct=weighted(lambda r: r.tcr_high_pct),
    )


def summarize(results: Iterable[DocumentResult]) -> CorpusSummary:
    """Per-subcorpus means and beyond-threshold percentages plus an AVG row.

    Results are folded in (subcorpus, document id) order so the summary is
    identical for any permutation of the input, and proportions are read off
    the verdict enums rather than recomputed from raw scores.
    """
    ordered = sorted(results, key=lambda r: (r.subcorpus, r.document_id))
    if not ordered:
        raise EmptyResultSetError("cannot summarize an empty result set")
    groups: dict[str, list[DocumentResult]] = {}
    for result in ordered:
        groups.setdefault(result.subcorpus, []).append(result)
    rows = []
    for label in sorted(groups):
        members = groups[label]
        n = len(members)
        verdicts_tcld = [m.feedback.tcld_verdict for m in members]
        verdicts_tcr = [m.feedback.tcr_verdict for m in members]
        rows.append(
            SubcorpusRow(
                label=label,
                count=n,
                mean_tcld=sum(m.scores.tcld for m in members) / n,
                mean_tcr=sum(m.scores.tcr for m in members) / n,
                tcld_low_pct=100.0 * verdicts_tcld.count(Verdict.BELOW_MIN) / n,
                tcld_high_pct=100.0 * verdicts_tcld.count(Verdict.ABOVE_MAX) / n,
                tcr_low_pct=100.0 * verdicts_tcr.count(Verdict.BELOW_MIN) / n,
                tcr_high_pct=100.0 * verdicts_tcr.count(Verdict.ABOVE_MAX) / n,
            )
        )
    return CorpusSummary(rows=tuple(rows), average=aggregate_rows(rows))


def trend_check(
    summary: CorpusSummary, ordered_labels: Sequence[str]
) -> list[TrendViolation]:
    """Check that mean TCLD falls and mean TCR rises along the given order.

    ``ordered_labels`` lists subcorpora in ascending skill order; every
    adjacent pair where TCLD increases or TCR decreases is reported. An empty
    list means both trends hold.
    """
    by_label = {row.label: row for row in summary.rows}
    rows = []
    for label in ordered_labels:
        if label not in by_label:
            raise UnknownLabelError(f"no subcorpus labelled {label!r} in summary")
        rows.append(by_label[label])
    violations: list[TrendViolation] = []
    for prev, cur in zip(rows, rows[1:]):
        if cur.mean_tcld > prev.mean_tcld:
            violations.append(
                TrendViolation("tcld", prev.label, cur.label, prev.mean_tcld, cur.mean_tcld)
            )
        if cur.mean_tcr < prev.mean_tcr:
            violations.append(
                TrendViolation("tcr", prev.label, cur.label, prev.mean_tcr, cur.mean_tcr)
            )
    return violations
