"""Decision support for value-driven cybersecurity innovation portfolios.

Carries innovation ideas through a four-stage funnel: categorization,
value-proposition scoring with a refinement loop, effort/impact road
mapping, and execution. Quantifies value through three closed-form
formulas and a seeded Monte Carlo estimate of business value, and audits
the portfolio's category mix against a target allocation.
"""

from .allocation import (
    DEFAULT_ALLOCATION_TARGET,
    AllocationTarget,
    PortfolioReport,
    allocation_report,
)
from .funnel import EventKind, FunnelEvent, advance, legal_events, next_stage, replay
from .model import (
    EffortImpactEstimate,
    Idea,
    InnovationCategory,
    McConfig,
    McSemantics,
    QuantInputs,
    Scorecard,
    StageState,
    validate_idea,
)
from .montecarlo import (
    McGrid,
    McResult,
    SweepEntry,
    closed_form_expectation,
    simulate_bv,
    sweep,
)
from .roadmap import (
    Proceed,
    Quadrant,
    QuadrantDecision,
    Recommendation,
    classify_quadrant,
    recommend,
)
from .scoring import CIVPSResult, GateDecision, GateOutcome, compute_civps, gate_decision
from .store import Portfolio, PortfolioConfig, PortfolioStore, load, save
from .values import (
    CompositeValueReport,
    composite_value_report,
    cost_benefit_value,
    operational_efficiency_value,
    risk_reduction_value,
)

__version__ = "0.1.0"

__all__ = [
    "AllocationTarget",
    "CIVPSResult",
    "CompositeValueReport",
    "DEFAULT_ALLOCATION_TARGET",
    "EffortImpactEstimate",
    "EventKind",
    "FunnelEvent",
    "GateDecision",
    "GateOutcome",
    "Idea",
    "InnovationCategory",
    "McConfig",
    "McGrid",
    "McResult",
    "McSemantics",
    "Portfolio",
    "PortfolioConfig",
    "PortfolioReport",
    "PortfolioStore",
    "Proceed",
    "Quadrant",
    "QuadrantDecision",
    "QuantInputs",
    "Recommendation",
    "Scorecard",
    "StageState",
    "SweepEntry",
    "advance",
    "allocation_report",
    "classify_quadrant",
    "closed_form_expectation",
    "composite_value_report",
    "compute_civps",
    "cost_benefit_value",
    "gate_decision",
    "legal_events",
    "load",
    "next_stage",
    "operational_efficiency_value",
    "recommend",
    "replay",
    "risk_reduction_value",
    "save",
    "simulate_bv",
    "sweep",
    "validate_idea",
]
