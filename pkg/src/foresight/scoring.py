"""CIVPS aggregation and the stage gate.

The score is computed in two steps so per-dimension means stay reportable:
average each dimension across scorers, then average the six dimension means.
Scorecards are always complete, so with uniform weights this equals the grand
mean over all 6 x n scores; the implementation uses the grand-mean form,
whose exact integer sums make the result order-independent bit for bit.
"""

from __future__ import annotations

from collections.abc import Sequence
from enum import Enum
from typing import Annotated, Optional

from pydantic import Field

from .errors import ConfigurationError, DomainValidationError
from .model import DomainModel, SCORE_DIMENSIONS, Scorecard, ThresholdScore

DEFAULT_CIVPS_THRESHOLD = 6.0

# Max absolute gap tolerated between `overall` and the mean of the six
# per-dimension means (non-zero only through float rounding).
MEAN_CONSISTENCY_TOL = 1e-12

WEIGHT_SUM_TOL = 1e-9


class CIVPSResult(DomainModel):
    """Aggregated value-proposition score for one idea."""

    per_dimension_mean: dict[str, ThresholdScore]
    overall: ThresholdScore
    scorer_count: Annotated[int, Field(ge=1)]


class GateDecision(str, Enum):
    PASS = "pass"
    RETURN_FOR_REFINEMENT = "return_for_refinement"


class GateOutcome(DomainModel):
    """Result of holding a CIVPS against the configured gate threshold."""

    decision: GateDecision
    threshold_used: ThresholdScore


def _check_weights(weights: Sequence[float]) -> tuple[float, ...]:
    ws = tuple(float(w) for w in weights)
    if len(ws) != len(SCORE_DIMENSIONS):
        raise ConfigurationError(
            f"expected {len(SCORE_DIMENSIONS)} dimension weights, got {len(ws)}"
        )
    if any(w < 0 for w in ws):
        raise ConfigurationError("dimension weights must be non-negative")
    if abs(sum(ws) - 1.0) > WEIGHT_SUM_TOL:
        raise ConfigurationError(f"dimension weights must sum to 1, got {sum(ws)!r}")
    return ws


def compute_civps(
    scorecards: Sequence[Scorecard],
    weights: Optional[Sequence[float]] = None,
) -> CIVPSResult:
    """Aggregate forum scorecards into one CIVPS.

    ``weights`` optionally reweights the six dimensions (non-negative,
    summing to 1); the default is uniform, where ``overall`` equals the
    grand mean of all individual scores.
    """
    if not scorecards:
        raise DomainValidationError("no scorecards: at least one is required")
    seen: set[str] = set()
    for card in scorecards:
        if card.scorer_id in seen:
            raise DomainValidationError(f"duplicate scorer {card.scorer_id!r}")
        seen.add(card.scorer_id)

    count = len(scorecards)
    dimension_sums = {name: 0 for name in SCORE_DIMENSIONS}
    for card in scorecards:
        for name in SCORE_DIMENSIONS:
            dimension_sums[name] += getattr(card, name)
    means = {name: dimension_sums[name] / count for name in SCORE_DIMENSIONS}

    if weights is None:
        # Equal weights: grand mean over all scores, exact integer arithmetic
        # until the single final division.
        overall = sum(dimension_sums.values()) / (len(SCORE_DIMENSIONS) * count)
    else:
        ws = _check_weights(weights)
        overall = sum(w * means[name] for w, name in zip(ws, SCORE_DIMENSIONS))

    return CIVPSResult(per_dimension_mean=means, overall=overall, scorer_count=count)


def gate_decision(result: CIVPSResult, threshold: float) -> GateOutcome:
    """Hold a CIVPS against the gate: meeting the threshold counts as a pass."""
    if not (1.0 <= threshold <= 10.0):
        raise ConfigurationError(f"gate threshold must be in [1, 10], got {threshold!r}")
    decision = (
        GateDecision.PASS
        if result.overall >= threshold
        else GateDecision.RETURN_FOR_REFINEMENT
    )
    return GateOutcome(decision=decision, threshold_used=threshold)
