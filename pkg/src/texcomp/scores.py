"""The full per-document score bundle."""

from __future__ import annotations

from dataclasses import dataclass

from .lexical_diversity import MaasConfig, lexical_diversity_scores
from .readability import readability_scores
from .segmentation import TextStatistics


@dataclass(frozen=True)
class ComplexityScores:
    yules_k: float
    maas_a2: float
    tcld: float
    ttr: float
    lix: float
    rix: float
    tcr: float


def compute_scores(
    stats: TextStatistics, maas_config: MaasConfig = MaasConfig()
) -> ComplexityScores:
    """All six complexity measures plus TTR for one document's statistics."""
    ld = lexical_diversity_scores(stats, maas_config)
    rd = readability_scores(stats)
    return ComplexityScores(
        yules_k=ld.yules_k,
        maas_a2=ld.maas_a2,
        tcld=ld.tcld,
        ttr=ld.ttr,
        lix=rd.lix,
        rix=rd.rix,
        tcr=rd.tcr,
    )
