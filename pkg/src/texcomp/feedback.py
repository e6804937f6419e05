"""Threshold comparison, categorical feedback, and profile calibration.

Raw score values are never part of the human-facing surface; feedback is a
pair of verdicts plus neutral message codes that a front end can re-tone.
Lower TCLD means more diverse vocabulary, higher TCR means more complex text,
so an above-max TCLD flags overly simple vocabulary while an above-max TCR
flags high complexity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import EmptyTrainingSetError, InvalidPercentilePairError
from .scores import ComplexityScores


class Verdict(str, Enum):
    BELOW_MIN = "below_min"
    WITHIN_RANGE = "within_range"
    ABOVE_MAX = "above_max"


class MessageCode(str, Enum):
    LD_OVERLY_SIMPLE_VOCABULARY = "LD_OVERLY_SIMPLE_VOCABULARY"
    LD_HIGHLY_DIVERSE_VOCABULARY = "LD_HIGHLY_DIVERSE_VOCABULARY"
    READABILITY_LOW_COMPLEXITY = "READABILITY_LOW_COMPLEXITY"
    READABILITY_HIGH_COMPLEXITY = "READABILITY_HIGH_COMPLEXITY"


class ProfileSource(str, Enum):
    DEFAULT = "default"
    CALIBRATED = "calibrated"
    MANUAL = "manual"


@dataclass(frozen=True)
class CalibrationMeta:
    """Provenance of a calibrated profile: sample size and percentile pair."""

    n: int
    p_low: float
    p_high: float


@dataclass(frozen=True)
class ThresholdProfile:
    tcld_min: float
    tcld_max: float
    tcr_min: float
    tcr_max: float
    source: ProfileSource = ProfileSource.MANUAL
    calibration_meta: CalibrationMeta | None = None

    def __post_init__(self):
        if self.tcld_min > self.tcld_max:
            raise ValueError("tcld_min must be <= tcld_max")
        if self.tcr_min > self.tcr_max:
            raise ValueError("tcr_min must be <= tcr_max")


@dataclass(frozen=True)
class FeedbackReport:
    """Verdicts plus message codes; ``scores`` is echoed for machine use only."""

    tcld_verdict: Verdict
    tcr_verdict: Verdict
    messages: tuple[MessageCode, ...]
    reliability_flag: bool
    scores: ComplexityScores


def default_thresholds() -> ThresholdProfile:
    """The built-in uncalibrated thresholds."""
    return ThresholdProfile(
        tcld_min=150.0,
        tcld_max=250.0,
        tcr_min=40.0,
        tcr_max=80.0,
        source=ProfileSource.DEFAULT,
    )


def _verdict(value: float, minimum: float, maximum: float) -> Verdict:
    # Strict comparisons: a score sitting exactly on a threshold is in range.
    if value > maximum:
        return Verdict.ABOVE_MAX
    if value < minimum:
        return Verdict.BELOW_MIN
    return Verdict.WITHIN_RANGE


def evaluate(
    scores: ComplexityScores,
    profile: ThresholdProfile,
    *,
    reliability_flag: bool = False,
) -> FeedbackReport:
    """Compare the combined scores against a profile and emit feedback.

    ``reliability_flag`` is passed through by callers that know the document
    was shorter than the lexical-diversity minimum.
    """
    tcld_verdict = _verdict(scores.tcld, profile.tcld_min, profile.tcld_max)
    tcr_verdict = _verdict(scores.tcr, profile.tcr_min, profile.tcr_max)
    messages: list[MessageCode] = []
    if tcld_verdict is Verdict.ABOVE_MAX:
        messages.append(MessageCode.LD_OVERLY_SIMPLE_VOCABULARY)
    elif tcld_verdict is Verdict.BELOW_MIN:
        messages.append(MessageCode.LD_HIGHLY_DIVERSE_VOCABULARY)
    if tcr_verdict is Verdict.ABOVE_MAX:
        messages.append(MessageCode.READABILITY_HIGH_COMPLEXITY)
    elif tcr_verdict is Verdict.BELOW_MIN:
        messages.append(MessageCode.READABILITY_LOW_COMPLEXITY)
    return FeedbackReport(
        tcld_verdict=tcld_verdict,
        tcr_verdict=tcr_verdict,
        messages=tuple(messages),
        reliability_flag=reliability_flag,
        scores=scores,
    )


def percentile(values: Sequence[float], p: float) -> float:
    """Percentile by linear interpolation between closest ranks.

    The rank position is (n - 1) * p / 100 into the sorted sample (numpy's
    default method).
    """
    if not values:
        raise ValueError("percentile of an empty sequence")
    if not 0.0 <= p <= 100.0:
        raise ValueError(f"percentile must be in [0, 100], got {p}")
    ordered = sorted(values)
    position = (len(ordered) - 1) * p / 100.0
    lower = math.floor(position)
    upper = math.ceil(position)
    if lower == upper:
        return float(ordered[lower])
    return ordered[lower] + (position - lower) * (ordered[upper] - ordered[lower])


def calibrate(
    training_scores: Iterable[tuple[float, float]],
    p_low: float = 5.0,
    p_high: float = 95.0,
) -> ThresholdProfile:
    """Derive thresholds from a peer group's (tcld, tcr) score pairs.

    A student's text should not differ drastically in complexity from texts
    by peers on the same course, so the band is set to the [p_low, p_high]
    percentile range of the training sample for each measure. Percentiles are
    robust to the outliers small class corpora tend to contain.
    """
    pairs = [(float(t), float(r)) for t, r in training_scores]
    if not pairs:
        raise EmptyTrainingSetError("calibration needs at least one score pair")
    if not (0.0 <= p_low < p_high <= 100.0):
        raise InvalidPercentilePairError(
            f"need 0 <= p_low < p_high <= 100, got ({p_low}, {p_high})"
        )
    tcld_sample = [pair[0] for pair in pairs]
    tcr_sample = [pair[1] for pair in pairs]
    return ThresholdProfile(
        tcld_min=percentile(tcld_sample, p_low),
        tcld_max=percentile(tcld_sample, p_high),
        tcr_min=percentile(tcr_sample, p_low),
        tcr_max=percentile(tcr_sample, p_high),
        source=ProfileSource.CALIBRATED,
        calibration_meta=CalibrationMeta(n=len(pairs), p_low=p_low, p_high=p_high),
    )
