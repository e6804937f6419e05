"""Report rendering: teacher-facing text, machine JSON, and CSV tables.

The text renderer is the only human-facing surface and deliberately contains
no numerals at all: formula values are never shown as they are, only verdicts
and message codes. JSON and CSV are machine formats and carry full-precision
or display-rounded numbers respectively.
"""

from __future__ import annotations

import csv
import io

from .corpus import CorpusSummary, DocumentResult, SubcorpusRow, TrendViolation
from .feedback import FeedbackReport, ThresholdProfile, Verdict
from .profiles import profile_to_dict
from .scores import ComplexityScores
from .segmentation import TextStatistics

REPORT_VERSION = 1

SUMMARY_COLUMNS = [
    "subcorpus",
    "count",
    "mean_tcld",
    "mean_tcr",
    "tcld_low_pct",
    "tcld_high_pct",
    "tcr_low_pct",
    "tcr_high_pct",
]

_VERDICT_TEXT = {
    Verdict.BELOW_MIN: "below the expected range",
    Verdict.WITHIN_RANGE: "within the expected range",
    Verdict.ABOVE_MAX: "above the expected range",
}


def render_text_report(report: FeedbackReport) -> str:
    """Human-facing feedback: verdicts and message codes, never numbers."""
    lines = [
        f"lexical diversity: {_VERDICT_TEXT[report.tcld_verdict]}",
        f"readability: {_VERDICT_TEXT[report.tcr_verdict]}",
    ]
    if report.messages:
        lines.append("feedback:")
        lines.extend(f"  {code.value}" for code in report.messages)
    else:
        lines.append("feedback: none")
    if report.reliability_flag:
        lines.append(
            "note: the text is shorter than the reliable-length minimum; "
            "lexical-diversity verdicts may be unstable"
        )
    return "\n".join(lines) + "\n"


def statistics_dict(stats: TextStatistics) -> dict:
    return {
        "token_count": stats.token_count,
        "type_count": stats.type_count,
        "sentence_count": stats.sentence_count,
        "long_word_count": stats.long_word_count,
        "frequency_spectrum": {str(i): v for i, v in sorted(stats.frequency_spectrum.items())},
    }


def scores_dict(scores: ComplexityScores) -> dict:
    return {
        "yules_k": scores.yules_k,
        "maas_a2": scores.maas_a2,
        "tcld": scores.tcld,
        "ttr": scores.ttr,
        "lix": scores.lix,
        "rix": scores.rix,
        "tcr": scores.tcr,
    }


def feedback_dict(report: FeedbackReport) -> dict:
    return {
        "tcld_verdict": report.tcld_verdict.value,
        "tcr_verdict": report.tcr_verdict.value,
        "messages": [code.value for code in report.messages],
        "reliability_flag": report.reliability_flag,
    }


def document_dict(result: DocumentResult) -> dict:
    return {
        "id": result.document_id,
        "subcorpus": result.subcorpus,
        "statistics": statistics_dict(result.statistics),
        "scores": scores_dict(result.scores),
        "feedback": feedback_dict(result.feedback),
    }


def analyze_report(result: DocumentResult, profile: ThresholdProfile) -> dict:
    return {
        "version": REPORT_VERSION,
        "id": result.document_id,
        "statistics": statistics_dict(result.statistics),
        "scores": scores_dict(result.scores),
        "feedback": feedback_dict(result.feedback),
        "profile": profile_to_dict(profile),
    }


def _row_dict(row: SubcorpusRow) -> dict:
    return {
        "subcorpus": row.label,
        "count": row.count,
        "mean_tcld": row.mean_tcld,
        "mean_tcr": row.mean_tcr,
        "tcld_low_pct": row.tcld_low_pct,
        "tcld_high_pct": row.tcld_high_pct,
        "tcr_low_pct": row.tcr_low_pct,
        "tcr_high_pct": row.tcr_high_pct,
    }


def batch_report(
    summary: CorpusSummary,
    errors: list[tuple[str, str]],
    violations: list[TrendViolation] | None = None,
    documents: list[DocumentResult] | None = None,
) -> dict:
    """Machine batch report; full precision, optional sections only when asked."""
    report = {
        "version": REPORT_VERSION,
        "summary": {
            "rows": [_row_dict(row) for row in summary.rows],
            "average": _row_dict(summary.average),
        },
        "errors": [{"id": doc_id, "error": message} for doc_id, message in errors],
    }
    if violations is not None:
        report["trend_violations"] = [
            {
                "measure": v.measure,
                "from_label": v.from_label,
                "to_label": v.to_label,
                "from_value": v.from_value,
                "to_value": v.to_value,
            }
            for v in violations
        ]
    if documents is not None:
        report["documents"] = [document_dict(result) for result in documents]
    return report


def _csv_row(row: SubcorpusRow) -> list[str]:
    # Display format: means and percentages at one decimal place.
    return [
        row.label,
        str(row.count),
        f"{row.mean_tcld:.1f}",
        f"{row.mean_tcr:.1f}",
        f"{row.tcld_low_pct:.1f}",
        f"{row.tcld_high_pct:.1f}",
        f"{row.tcr_low_pct:.1f}",
        f"{row.tcr_high_pct:.1f}",
    ]


def summary_csv(summary: CorpusSummary) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SUMMARY_COLUMNS)
    for row in summary.rows:
        writer.writerow(_csv_row(row))
    writer.writerow(_csv_row(summary.average))
    return buffer.getvalue()


PER_DOC_COLUMNS = [
    "id",
    "subcorpus",
    "token_count",
    "type_count",
    "sentence_count",
    "long_word_count",
    "yules_k",
    "maas_a2",
    "tcld",
    "ttr",
    "lix",
    "rix",
    "tcr",
    "tcld_verdict",
    "tcr_verdict",
    "reliability_flag",
]


def per_document_csv(documents: list[DocumentResult]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(PER_DOC_COLUMNS)
    for result in documents:
        stats, scores, report = result.statistics, result.scores, result.feedback
        writer.writerow(
            [
                result.document_id,
                result.subcorpus,
                stats.token_count,
                stats.type_count,
                stats.sentence_count,
                stats.long_word_count,
                repr(scores.yules_k),
                repr(scores.maas_a2),
                repr(scores.tcld),
                repr(scores.ttr),
                repr(scores.lix),
                repr(scores.rix),
                repr(scores.tcr),
                report.tcld_verdict.value,
                report.tcr_verdict.value,
                str(report.reliability_flag).lower(),
            ]
        )
    return buffer.getvalue()
