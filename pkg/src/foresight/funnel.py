"""Lifecycle state machine for ideas, with an auditable event history.

Transitions exist only in ``TRANSITIONS``; everything else is illegal.
Scorecard submission is a self-transition on the categorized stage, so the
gate can only be held while scoring is open, and scores are frozen once an
idea passes. Events carry the payload that justifies them (gate events an
outcome, roadmap events the estimate), which makes the history replayable:
folding an idea's events from a draft reset reproduces its stored state.
"""

from __future__ import annotations

from collections.abc import Iterable
from enum import Enum
from typing import Optional

from pydantic import model_validator

from .errors import EventConsistencyError, IllegalTransitionError
from .model import (
    DomainModel,
    EffortImpactEstimate,
    Idea,
    InnovationCategory,
    Scorecard,
    StageState,
    UtcDatetime,
)
from .roadmap import QuadrantDecision
from .scoring import GateDecision, GateOutcome


class EventKind(str, Enum):
    CATEGORIZE = "categorize"
    SUBMIT_SCORES = "submit_scores"
    GATE_PASS = "gate_pass"
    GATE_RETURN = "gate_return"
    ROADMAP = "roadmap"
    APPROVE_EXECUTION = "approve_execution"
    DECLARE_VALUE_REALIZED = "declare_value_realized"
    RESUBMIT = "resubmit"
    REJECT = "reject"


_PAYLOAD_FIELDS = ("category", "scorecard", "outcome", "estimate", "decision")

_ALLOWED_PAYLOADS: dict[EventKind, frozenset[str]] = {
    EventKind.CATEGORIZE: frozenset({"category"}),
    EventKind.SUBMIT_SCORES: frozenset({"scorecard"}),
    EventKind.GATE_PASS: frozenset({"outcome"}),
    EventKind.GATE_RETURN: frozenset({"outcome"}),
    EventKind.ROADMAP: frozenset({"estimate", "decision"}),
    EventKind.APPROVE_EXECUTION: frozenset(),
    EventKind.DECLARE_VALUE_REALIZED: frozenset(),
    EventKind.RESUBMIT: frozenset(),
    EventKind.REJECT: frozenset(),
}


class FunnelEvent(DomainModel):
    """One audited action on one idea.

    Payload fields other than the ones allowed for the event kind must stay
    unset; required payloads (gate outcome, roadmap estimate, submitted
    scorecard) are enforced by ``advance``.
    """

    kind: EventKind
    actor: str
    at: UtcDatetime
    category: Optional[InnovationCategory] = None
    scorecard: Optional[Scorecard] = None
    outcome: Optional[GateOutcome] = None
    estimate: Optional[EffortImpactEstimate] = None
    decision: Optional[QuadrantDecision] = None

    @model_validator(mode="after")
    def _payload_matches_kind(self) -> "FunnelEvent":
        allowed = _ALLOWED_PAYLOADS[self.kind]
        stray = [
            name
            for name in _PAYLOAD_FIELDS
            if getattr(self, name) is not None and name not in allowed
        ]
        if stray:
            raise ValueError(
                f"event kind {self.kind.value!r} does not accept payload fields {stray}"
            )
        return self


# stage -> {event kind -> next stage}; Reject is legal from every
# non-terminal stage, and the two terminal stages accept nothing.
TRANSITIONS: dict[StageState, dict[EventKind, StageState]] = {
    StageState.DRAFT: {
        EventKind.CATEGORIZE: StageState.CATEGORIZED,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.CATEGORIZED: {
        EventKind.SUBMIT_SCORES: StageState.CATEGORIZED,
        EventKind.GATE_PASS: StageState.SCORED,
        EventKind.GATE_RETURN: StageState.RETURNED_FOR_REFINEMENT,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.SCORED: {
        EventKind.ROADMAP: StageState.ROADMAPPED,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.ROADMAPPED: {
        EventKind.APPROVE_EXECUTION: StageState.IN_EXECUTION,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.IN_EXECUTION: {
        EventKind.DECLARE_VALUE_REALIZED: StageState.VALUE_REALIZED,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.RETURNED_FOR_REFINEMENT: {
        EventKind.RESUBMIT: StageState.CATEGORIZED,
        EventKind.REJECT: StageState.REJECTED,
    },
    StageState.VALUE_REALIZED: {},
    StageState.REJECTED: {},
}

TERMINAL_STAGES = frozenset({StageState.VALUE_REALIZED, StageState.REJECTED})


def next_stage(stage: StageState, kind: EventKind) -> StageState:
    try:
        return TRANSITIONS[stage][kind]
    except KeyError:
        raise IllegalTransitionError(
            f"event {kind.value!r} is illegal in stage {stage.value!r}"
        ) from None


def legal_events(stage: StageState) -> tuple[EventKind, ...]:
    """Event kinds the stage accepts, in a fixed order."""
    table = TRANSITIONS[stage]
    return tuple(kind for kind in EventKind if kind in table)


def _check_consistency(idea: Idea, event: FunnelEvent, quorum: int) -> None:
    kind = event.kind
    if event.at < idea.created_at:
        raise EventConsistencyError(
            f"event timestamp {event.at.isoformat()} precedes idea creation"
        )
    if kind is EventKind.SUBMIT_SCORES and event.scorecard is None:
        raise EventConsistencyError("submit_scores event must carry a scorecard")
    if kind is EventKind.ROADMAP and event.estimate is None:
        raise EventConsistencyError("roadmap event must carry an effort/impact estimate")
    if kind in (EventKind.GATE_PASS, EventKind.GATE_RETURN):
        if len(idea.scorecards) < quorum:
            raise EventConsistencyError(
                f"gate events require at least {quorum} scorecard(s),"
                f" idea has {len(idea.scorecards)}"
            )
        if event.outcome is None:
            raise EventConsistencyError(
                f"{kind.value} event must carry the gate outcome that justifies it"
            )
        required = (
            GateDecision.PASS
            if kind is EventKind.GATE_PASS
            else GateDecision.RETURN_FOR_REFINEMENT
        )
        if event.outcome.decision is not required:
            raise EventConsistencyError(
                f"{kind.value} event carries gate decision"
                f" {event.outcome.decision.value!r}, expected {required.value!r}"
            )


def _merge_scorecards(
    cards: tuple[Scorecard, ...], incoming: Scorecard
) -> tuple[Scorecard, ...]:
    # A scorer may revise their card before the gate; replacement keeps the
    # one-card-per-scorer invariant.
    replaced = False
    merged: list[Scorecard] = []
    for card in cards:
        if card.scorer_id == incoming.scorer_id:
            merged.append(incoming)
            replaced = True
        else:
            merged.append(card)
    if not replaced:
        merged.append(incoming)
    return tuple(merged)


def advance(idea: Idea, event: FunnelEvent, *, quorum: int = 1) -> Idea:
    """Apply one event to an idea, returning its next state.

    Raises ``IllegalTransitionError`` when the transition table has no entry
    for (stage, event kind) and ``EventConsistencyError`` when the event's
    payload does not justify it.
    """
    stage = next_stage(idea.stage, event.kind)
    _check_consistency(idea, event, quorum)

    updates: dict = {"stage": stage, "updated_at": event.at}
    if event.kind is EventKind.CATEGORIZE and event.category is not None:
        updates["category"] = event.category
    if event.kind is EventKind.SUBMIT_SCORES:
        updates["scorecards"] = _merge_scorecards(idea.scorecards, event.scorecard)
    if event.kind is EventKind.ROADMAP:
        updates["estimate"] = event.estimate
    return idea.model_copy(update=updates)


def reset_to_draft(idea: Idea) -> Idea:
    """The idea as created, before any event touched it."""
    return idea.model_copy(
        update={
            "stage": StageState.DRAFT,
            "scorecards": (),
            "estimate": None,
            "updated_at": idea.created_at,
        }
    )


def replay(base: Idea, events: Iterable[FunnelEvent], *, quorum: int = 1) -> Idea:
    """Fold events over a base idea; the event-sourcing identity check."""
    state = base
    for event in events:
        state = advance(state, event, quorum=quorum)
    return state
