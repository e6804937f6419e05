"""texcomp: text-complexity scoring and threshold feedback for student writing.

Measures lexical diversity (Yule's K, Maas a2) and readability (LIX, RIX),
combines each pair into a single score (TCLD and TCR), and compares the
combined scores against default or corpus-calibrated threshold bands to
produce categorical feedback. A batch layer aggregates collections of
documents into per-subcorpus summaries.
"""

from .corpus import (
    AVERAGE_LABEL,
    CorpusSummary,
    DocumentResult,
    SubcorpusRow,
    TrendViolation,
    aggregate_rows,
    analyze_document,
    summarize,
    trend_check,
)
from .errors import (
    EmptyResultSetError,
    EmptyTrainingSetError,
    InsufficientTokensError,
    InvalidPercentilePairError,
    ManifestError,
    ProfileError,
    TexcompError,
    UnknownLabelError,
    ZeroSentencesError,
    ZeroTokensError,
)
from .feedback import (
    CalibrationMeta,
    FeedbackReport,
    MessageCode,
    ProfileSource,
    ThresholdProfile,
    Verdict,
    calibrate,
    default_thresholds,
    evaluate,
    percentile,
)
from .lexical_diversity import (
    LexicalDiversityScores,
    MaasConfig,
    lexical_diversity_scores,
    maas_a2,
    tcld,
    ttr,
    yules_k,
)
from .manifest import ManifestEntry, load_manifest, parse_manifest
from .profiles import load_profile, profile_from_dict, profile_to_dict, save_profile
from .readability import ReadabilityScores, lix, readability_scores, rix, tcr
from .scores import ComplexityScores, compute_scores
from .segmentation import (
    SegmentationConfig,
    TextStatistics,
    compute_statistics,
    split_sentences,
    tokenize,
)

__version__ = "0.1.0"

__all__ = [
    "AVERAGE_LABEL",
    "CalibrationMeta",
    "ComplexityScores",
    "CorpusSummary",
    "DocumentResult",
    "EmptyResultSetError",
    "EmptyTrainingSetError",
    "FeedbackReport",
    "InsufficientTokensError",
    "InvalidPercentilePairError",
    "LexicalDiversityScores",
    "MaasConfig",
    "ManifestEntry",
    "ManifestError",
    "MessageCode",
    "ProfileError",
    "ProfileSource",
    "ReadabilityScores",
    "SegmentationConfig",
    "SubcorpusRow",
    "TexcompError",
    "TextStatistics",
    "ThresholdProfile",
    "TrendViolation",
    "UnknownLabelError",
    "Verdict",
    "ZeroSentencesError",
    "ZeroTokensError",
    "aggregate_rows",
    "analyze_document",
    "calibrate",
    "compute_scores",
    "compute_statistics",
    "default_thresholds",
    "evaluate",
    "lexical_diversity_scores",
    "lix",
    "load_manifest",
    "load_profile",
    "maas_a2",
    "parse_manifest",
    "percentile",
    "profile_from_dict",
    "profile_to_dict",
    "readability_scores",
    "rix",
    "save_profile",
    "split_sentences",
    "summarize",
    "tcld",
    "tcr",
    "tokenize",
    "trend_check",
    "ttr",
    "yules_k",
]
