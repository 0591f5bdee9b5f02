"""Request and response models shared by the HTTP API and the CLI.

The CLI's ``--format json`` output is the pydantic dump of these same
models, so both surfaces emit identical payloads by construction.
"""

from __future__ import annotations

from typing import Annotated, Optional

from pydantic import Field

from .allocation import PortfolioReport
from .funnel import EventKind, FunnelEvent
from .model import (
    DimensionScore,
    DomainModel,
    EffortImpactEstimate,
    Idea,
    InnovationCategory,
    McConfig,
    McSemantics,
    Money,
    Probability,
    QuantInputs,
    Seed,
    ThresholdScore,
)
from .montecarlo import HistogramBin, McResult, SweepEntry
from .roadmap import QuadrantDecision, QuadrantPoint, Recommendation
from .scoring import CIVPSResult, GateOutcome
from .values import CompositeValueReport


class IdeaCreateRequest(DomainModel):
    title: str
    description: str = ""
    category: InnovationCategory
    originator: str
    civps_threshold_override: Optional[ThresholdScore] = None
    quant_inputs: Optional[QuantInputs] = None
    mc_config: Optional[McConfig] = None


class ScorecardCreateRequest(DomainModel):
    scorer_id: str
    revenue: DimensionScore
    cost_efficiency: DimensionScore
    operational_efficiency: DimensionScore
    risk_mitigation: DimensionScore
    trust_building: DimensionScore
    strategic_alignment: DimensionScore


class AdvanceRequest(DomainModel):
    """A funnel event as submitted by a client; timestamps are server-set.

    Gate events may omit the outcome: the service then computes it from the
    idea's scorecards and effective threshold, which also enforces that the
    requested gate direction is justified.
    """

    kind: EventKind
    actor: str
    category: Optional[InnovationCategory] = None
    scorecard: Optional[ScorecardCreateRequest] = None
    outcome: Optional[GateOutcome] = None
    estimate: Optional[EffortImpactEstimate] = None
    decision: Optional[QuadrantDecision] = None


class SimulateRequest(DomainModel):
    """Simulation parameters; n and semantics fall back to portfolio defaults."""

    c_incident: Money
    p_incident: Probability
    c_investment: Money
    r_investment: Probability
    n: Optional[Annotated[int, Field(ge=1)]] = None
    seed: Seed
    semantics: Optional[McSemantics] = None


class SimulateResponse(McResult):
    """Simulation result plus everything a client needs to render it."""

    config: McConfig
    expected_bv: float
    histogram: tuple[HistogramBin, ...]


class SweepRequest(DomainModel):
    c_incident: Annotated[tuple[Money, ...], Field(min_length=1)]
    p_incident: Annotated[tuple[Probability, ...], Field(min_length=1)]
    c_investment: Annotated[tuple[Money, ...], Field(min_length=1)]
    r_investment: Annotated[tuple[Probability, ...], Field(min_length=1)]
    n: Optional[Annotated[tuple[Annotated[int, Field(ge=1)], ...], Field(min_length=1)]] = None
    semantics: Optional[Annotated[tuple[McSemantics, ...], Field(min_length=1)]] = None
    master_seed: Seed = 0


class SweepResponse(DomainModel):
    master_seed: Seed
    entries: tuple[SweepEntry, ...]


class CivpsResponse(DomainModel):
    idea_id: str
    result: CIVPSResult
    gate: GateOutcome


class IdeaListResponse(DomainModel):
    total: Annotated[int, Field(ge=0)]
    ideas: tuple[Idea, ...]


class IdeaDetailResponse(Idea):
    """An idea plus server-derived decision support.

    ``legal_events`` lists exactly the transitions the funnel would accept,
    so clients never have to re-implement the transition table.
    """

    legal_events: tuple[EventKind, ...]
    civps: Optional[CIVPSResult] = None
    decision: Optional[QuadrantDecision] = None
    recommendation: Optional[Recommendation] = None


class AdvanceResponse(DomainModel):
    idea: Idea
    event: FunnelEvent


class HistoryResponse(DomainModel):
    idea_id: str
    events: tuple[FunnelEvent, ...]


class AllocationResponse(DomainModel):
    """Category mix over live ideas and over the executed slice."""

    live: PortfolioReport
    executed: PortfolioReport


class QuadrantsResponse(DomainModel):
    points: tuple[QuadrantPoint, ...]


class HealthResponse(DomainModel):
    status: str


class ApiError(DomainModel):
    """Error payload: one machine code per inner error class."""

    status: int
    code: str
    message: str
    path: Optional[str] = None


__all__ = [
    "AdvanceRequest",
    "AdvanceResponse",
    "AllocationResponse",
    "ApiError",
    "CivpsResponse",
    "CompositeValueReport",
    "HealthResponse",
    "HistoryResponse",
    "IdeaCreateRequest",
    "IdeaDetailResponse",
    "IdeaListResponse",
    "QuadrantsResponse",
    "ScorecardCreateRequest",
    "SimulateRequest",
    "SimulateResponse",
    "SweepRequest",
    "SweepResponse",
]
