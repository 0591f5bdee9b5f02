"""Effort/impact classification and per-quadrant execution advice.

Effort and impact share the 1-10 integer scale of the scorecards. A score at
or below its threshold counts as "low" (ties resolve to the lower-risk
reading); the four (low/high effort, low/high impact) combinations map to
one quadrant each.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .errors import ConfigurationError
from .model import DomainModel, EffortImpactEstimate, InnovationCategory
from .scoring import CIVPSResult

DEFAULT_EFFORT_THRESHOLD = 5
DEFAULT_IMPACT_THRESHOLD = 5
DEFAULT_TOP_TIER_THRESHOLD = 8.0

TOP_TIER_CATEGORIES = frozenset(
    {InnovationCategory.DISRUPTIVE, InnovationCategory.TRANSFORMATIVE}
)


class Quadrant(str, Enum):
    QUICK_WIN = "quick_win"
    RISKY_VENTURE = "risky_venture"
    REASSESS_SCOPE = "reassess_scope"
    CONDITIONAL_GO = "conditional_go"


class QuadrantDecision(DomainModel):
    quadrant: Quadrant
    rationale: str


class Proceed(str, Enum):
    YES = "yes"
    NO = "no"
    CONDITIONAL = "conditional"


class Recommendation(DomainModel):
    proceed: Proceed
    conditions: tuple[str, ...]


_QUADRANTS = {
    (True, True): Quadrant.QUICK_WIN,
    (False, False): Quadrant.RISKY_VENTURE,
    (False, True): Quadrant.REASSESS_SCOPE,
    (True, False): Quadrant.CONDITIONAL_GO,
}


def classify_quadrant(
    estimate: EffortImpactEstimate,
    effort_threshold: int = DEFAULT_EFFORT_THRESHOLD,
    impact_threshold: int = DEFAULT_IMPACT_THRESHOLD,
) -> QuadrantDecision:
    """Place an estimate on the four-quadrant map.

    Thresholds must leave both a low and a high band on the 1-10 scale,
    so they live in [1, 9].
    """
    for name, value in (("effort", effort_threshold), ("impact", impact_threshold)):
        if not (1 <= value <= 9):
            raise ConfigurationError(f"{name} threshold must be in [1, 9], got {value!r}")
    low_effort = estimate.effort <= effort_threshold
    low_impact = estimate.impact <= impact_threshold
    quadrant = _QUADRANTS[(low_effort, low_impact)]
    rationale = (
        f"effort {estimate.effort} is {'low' if low_effort else 'high'}"
        f" (<= {effort_threshold} counts as low);"
        f" impact {estimate.impact} is {'low' if low_impact else 'high'}"
        f" (<= {impact_threshold} counts as low)"
    )
    return QuadrantDecision(quadrant=quadrant, rationale=rationale)


def recommend(
    decision: QuadrantDecision,
    civps: Optional[CIVPSResult],
    category: InnovationCategory,
    top_tier_threshold: float = DEFAULT_TOP_TIER_THRESHOLD,
) -> Recommendation:
    """Per-quadrant execution advice.

    Quick wins proceed outright. Risky ventures proceed conditionally and
    only for disruptive/transformative ideas whose CIVPS reaches the
    top-tier threshold. Low-effort/high-impact ideas get a conditional go on
    the same CIVPS bar; high-effort/low-impact ideas are sent back for scope
    reassessment.
    """
    quadrant = decision.quadrant
    if quadrant is Quadrant.QUICK_WIN:
        return Recommendation(
            proceed=Proceed.YES, conditions=("moderate CIVPS suffices",)
        )
    if quadrant is Quadrant.REASSESS_SCOPE:
        return Recommendation(
            proceed=Proceed.NO,
            conditions=("scope reassessment required before execution",),
        )

    conditions: list[str] = []
    blockers: list[str] = []
    if quadrant is Quadrant.RISKY_VENTURE:
        if category in TOP_TIER_CATEGORIES:
            conditions.append(f"category {category.value} is eligible for top-tier ventures")
        else:
            blockers.append(
                f"category must be disruptive or transformative, got {category.value}"
            )
    if civps is None:
        blockers.append("CIVPS required")
    elif civps.overall >= top_tier_threshold:
        conditions.append(
            f"CIVPS {civps.overall:.2f} meets the top-tier threshold {top_tier_threshold:.2f}"
        )
    else:
        blockers.append(
            f"CIVPS {civps.overall:.2f} is below the top-tier threshold {top_tier_threshold:.2f}"
        )

    if blockers:
        return Recommendation(proceed=Proceed.NO, conditions=tuple(blockers))
    return Recommendation(proceed=Proceed.CONDITIONAL, conditions=tuple(conditions))


class QuadrantPoint(DomainModel):
    """One idea's position on the quadrant plot."""

    idea_id: str
    title: str
    effort: int
    impact: int
    decision: QuadrantDecision
