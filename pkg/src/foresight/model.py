"""Shared domain types for the innovation funnel.

Every other module builds on the types defined here. All models are frozen
pydantic values: mutation means constructing a new value. The pydantic JSON
dump (snake_case field names, lowercase enum values) is the one canonical
schema shared by the file store, the HTTP API, and the CLI.

Monetary amounts are plain non-negative floats in currency-agnostic units;
the portfolio file carries a currency label for display only. Tests compare
monetary results with a relative tolerance of ``MONEY_RTOL``.
"""

from __future__ import annotations

from datetime import datetime, timezone
from enum import Enum
from typing import Annotated, Optional

from pydantic import AfterValidator, BaseModel, ConfigDict, Field

MONEY_RTOL = 1e-9

SCORE_DIMENSIONS = (
    "revenue",
    "cost_efficiency",
    "operational_efficiency",
    "risk_mitigation",
    "trust_building",
    "strategic_alignment",
)


def _require_utc(value: datetime) -> datetime:
    if value.tzinfo is None:
        raise ValueError("timestamp must be timezone-aware")
    return value.astimezone(timezone.utc)


UtcDatetime = Annotated[datetime, AfterValidator(_require_utc)]
Money = Annotated[float, Field(ge=0, allow_inf_nan=False)]
PositiveMoney = Annotated[float, Field(gt=0, allow_inf_nan=False)]
Probability = Annotated[float, Field(ge=0, le=1, allow_inf_nan=False)]
DimensionScore = Annotated[int, Field(ge=1, le=10)]
ThresholdScore = Annotated[float, Field(ge=1, le=10, allow_inf_nan=False)]
Seed = Annotated[int, Field(ge=0, le=2**64 - 1)]


def utcnow() -> datetime:
    return datetime.now(timezone.utc)


class DomainModel(BaseModel):
    """Base for all domain values: frozen, no unknown fields."""

    model_config = ConfigDict(frozen=True, extra="forbid")


class InnovationCategory(str, Enum):
    SUSTAINING = "sustaining"
    INCREMENTAL = "incremental"
    DISRUPTIVE = "disruptive"
    TRANSFORMATIVE = "transformative"


class StageState(str, Enum):
    DRAFT = "draft"
    CATEGORIZED = "categorized"
    SCORED = "scored"
    ROADMAPPED = "roadmapped"
    IN_EXECUTION = "in_execution"
    VALUE_REALIZED = "value_realized"
    RETURNED_FOR_REFINEMENT = "returned_for_refinement"
    REJECTED = "rejected"


class Scorecard(DomainModel):
    """One forum member's six 1-10 dimension scores for one idea."""

    scorer_id: str
    revenue: DimensionScore
    cost_efficiency: DimensionScore
    operational_efficiency: DimensionScore
    risk_mitigation: DimensionScore
    trust_building: DimensionScore
    strategic_alignment: DimensionScore
    submitted_at: UtcDatetime

    def dimension_scores(self) -> tuple[int, ...]:
        """Scores in the fixed ``SCORE_DIMENSIONS`` order."""
        return tuple(getattr(self, name) for name in SCORE_DIMENSIONS)


class RiskReductionInput(DomainModel):
    """Loss estimates before/after an innovation plus the probability reduction."""

    pl_before: Money
    pl_after: Money
    p_reduction: Probability


class EfficiencyInput(DomainModel):
    """Operational gains against a strictly positive implementation cost."""

    g_operational: Money
    c_implementation: PositiveMoney


class CostBenefitInput(DomainModel):
    """Aggregate savings against strictly positive aggregate costs."""

    total_savings: Money
    total_costs: PositiveMoney


class QuantInputs(DomainModel):
    """Optional inputs for each of the three closed-form value formulas."""

    rrv: Optional[RiskReductionInput] = None
    oev: Optional[EfficiencyInput] = None
    cbv: Optional[CostBenefitInput] = None


class McSemantics(str, Enum):
    """Which comparison rule marks an iteration as a prevented incident.

    ``RESIDUAL_INCIDENT`` (the default) counts a draw below the residual
    incident probability ``p_incident * (1 - r_investment)``.
    ``PREVENTED_EVENT`` counts a draw below ``p_incident * r_investment``,
    i.e. an incident that would have occurred and was averted.
    """

    RESIDUAL_INCIDENT = "residual_incident"
    PREVENTED_EVENT = "prevented_event"


class McConfig(DomainModel):
    """Parameters for one business-value simulation run."""

    c_incident: Money
    p_incident: Probability
    c_investment: Money
    r_investment: Probability
    n: Annotated[int, Field(ge=1)]
    seed: Seed
    semantics: McSemantics = McSemantics.RESIDUAL_INCIDENT


class EffortImpactEstimate(DomainModel):
    """Road-mapping estimate: 1-10 effort and impact scores plus free-text notes."""

    effort: DimensionScore
    impact: DimensionScore
    effort_notes: str = ""
    impact_notes: str = ""


class Idea(DomainModel):
    """An innovation proposal flowing through the four-stage funnel."""

    id: str
    title: str
    description: str = ""
    category: InnovationCategory
    originator: str
    stage: StageState = StageState.DRAFT
    created_at: UtcDatetime
    updated_at: UtcDatetime
    scorecards: tuple[Scorecard, ...] = ()
    civps_threshold_override: Optional[ThresholdScore] = None
    estimate: Optional[EffortImpactEstimate] = None
    quant_inputs: Optional[QuantInputs] = None
    mc_config: Optional[McConfig] = None


class Violation(DomainModel):
    """One invariant violation, located by a JSON-pointer-style path."""

    path: str
    message: str


def validate_idea(idea: Idea, base_path: str = "") -> list[Violation]:
    """Check the cross-field invariants of an idea.

    Returns every violation found, not only the first; an empty list means
    the idea is valid. Field-level constraints (score ranges, probability
    bounds) are enforced at construction and cannot be violated here.
    """
    violations: list[Violation] = []
    if not idea.id:
        violations.append(Violation(path=f"{base_path}/id", message="id must be non-empty"))
    if not idea.title.strip():
        violations.append(
            Violation(path=f"{base_path}/title", message="title must be non-empty")
        )
    if idea.updated_at < idea.created_at:
        violations.append(
            Violation(
                path=f"{base_path}/updated_at",
                message="updated_at must not precede created_at",
            )
        )
    seen: dict[str, int] = {}
    for index, card in enumerate(idea.scorecards):
        if card.scorer_id in seen:
            violations.append(
                Violation(
                    path=f"{base_path}/scorecards/{index}/scorer_id",
                    message=(
                        f"duplicate scorer {card.scorer_id!r}"
                        f" (first at index {seen[card.scorer_id]})"
                    ),
                )
            )
        else:
            seen[card.scorer_id] = index
    return violations
