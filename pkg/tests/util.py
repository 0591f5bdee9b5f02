"""Shared test builders: deterministic fixtures and seeded random generators."""

from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone

from foresight.funnel import EventKind, FunnelEvent, advance, legal_events
from foresight.model import (
    EffortImpactEstimate,
    Idea,
    InnovationCategory,
    McConfig,
    McSemantics,
    Scorecard,
)
from foresight.scoring import GateOutcome, compute_civps, gate_decision
from foresight.store import Portfolio

T0 = datetime(2026, 1, 1, 12, 0, 0, tzinfo=timezone.utc)

CATEGORIES = list(InnovationCategory)


def at(minutes: float) -> datetime:
    return T0 + timedelta(minutes=minutes)


def make_scorecard(
    scorer: str = "member-1",
    scores: tuple[int, int, int, int, int, int] = (7, 7, 7, 7, 7, 7),
    when: datetime = T0,
) -> Scorecard:
    rev, cost, op, risk, trust, strat = scores
    return Scorecard(
        scorer_id=scorer,
        revenue=rev,
        cost_efficiency=cost,
        operational_efficiency=op,
        risk_mitigation=risk,
        trust_building=trust,
        strategic_alignment=strat,
        submitted_at=when,
    )


def make_idea(
    idea_id: str = "idea-001",
    category: InnovationCategory = InnovationCategory.SUSTAINING,
    title: str | None = None,
    when: datetime = T0,
    **overrides,
) -> Idea:
    return Idea(
        id=idea_id,
        title=title if title is not None else f"Idea {idea_id}",
        category=category,
        originator="originator-1",
        created_at=when,
        updated_at=when,
        **overrides,
    )


def walk_events(idea: Idea, events: list[FunnelEvent]) -> Idea:
    state = idea
    for event in events:
        state = advance(state, event)
    return state


def scored_events(
    scores: tuple[int, int, int, int, int, int],
    base_minute: float,
    threshold: float = 6.0,
    scorer: str = "member-1",
) -> list[FunnelEvent]:
    """Categorize, score, and gate one idea; the gate outcome is computed."""
    card = make_scorecard(scorer=scorer, scores=scores, when=at(base_minute + 1))
    outcome = gate_decision(compute_civps([card]), threshold)
    return [
        FunnelEvent(kind=EventKind.CATEGORIZE, actor="forum", at=at(base_minute)),
        FunnelEvent(
            kind=EventKind.SUBMIT_SCORES, actor=scorer, at=at(base_minute + 1), scorecard=card
        ),
        FunnelEvent(
            kind=EventKind.GATE_PASS, actor="forum", at=at(base_minute + 2), outcome=outcome
        ),
    ]


def roadmap_event(effort: int, impact: int, minute: float) -> FunnelEvent:
    return FunnelEvent(
        kind=EventKind.ROADMAP,
        actor="forum",
        at=at(minute),
        estimate=EffortImpactEstimate(effort=effort, impact=impact),
    )


def golden_portfolio() -> Portfolio:
    """Deterministic 20-idea portfolio: category mix 9/8/2/1.

    Ideas 001-004 are roadmapped at the four quadrant corners, idea-001
    carrying the (8, 6, 7, 9, 5, 7) scorecard; idea-005 is in execution.
    Everything is built through the funnel so histories replay exactly.
    """
    plan = (
        [InnovationCategory.SUSTAINING] * 9
        + [InnovationCategory.INCREMENTAL] * 8
        + [InnovationCategory.DISRUPTIVE] * 2
        + [InnovationCategory.TRANSFORMATIVE] * 1
    )
    ideas: list[Idea] = []
    events: dict[str, tuple[FunnelEvent, ...]] = {}
    corners = {1: (2, 2), 2: (8, 8), 3: (8, 2), 4: (2, 8)}
    for index, category in enumerate(plan, start=1):
        idea_id = f"idea-{index:03d}"
        idea = make_idea(idea_id, category, title=f"Idea {index:03d}", when=at(0))
        history: list[FunnelEvent] = []
        base = index * 60.0
        if index == 1:
            history += scored_events((8, 6, 7, 9, 5, 7), base)
            history.append(roadmap_event(*corners[index], base + 3))
        elif index in corners:
            history += scored_events((8, 8, 8, 8, 8, 8), base)
            history.append(roadmap_event(*corners[index], base + 3))
        elif index == 5:
            history += scored_events((8, 8, 8, 8, 8, 8), base)
            history.append(roadmap_event(3, 3, base + 3))
            history.append(
                FunnelEvent(kind=EventKind.APPROVE_EXECUTION, actor="forum", at=at(base + 4))
            )
        ideas.append(walk_events(idea, history))
        if history:
            events[idea_id] = tuple(history)
    return Portfolio(ideas=tuple(ideas), events=events)


# -- seeded random generators -------------------------------------------------


def random_scorecard(rng: random.Random, scorer: str, when: datetime) -> Scorecard:
    return make_scorecard(
        scorer=scorer,
        scores=tuple(rng.randint(1, 10) for _ in range(6)),
        when=when,
    )


def random_legal_walk(
    rng: random.Random, idea: Idea, max_steps: int = 12
) -> tuple[list[FunnelEvent], Idea]:
    """A random walk through the transition table, always legal."""
    state = idea
    events: list[FunnelEvent] = []
    minute = 1.0
    for _ in range(rng.randint(0, max_steps)):
        options = list(legal_events(state.stage))
        if not state.scorecards:
            options = [
                kind
                for kind in options
                if kind not in (EventKind.GATE_PASS, EventKind.GATE_RETURN)
            ]
        if not options:
            break
        kind = rng.choice(options)
        when = idea.created_at + timedelta(minutes=minute)
        minute += rng.randint(1, 30)
        payload: dict = {}
        if kind is EventKind.CATEGORIZE and rng.random() < 0.5:
            payload["category"] = rng.choice(CATEGORIES)
        elif kind is EventKind.SUBMIT_SCORES:
            payload["scorecard"] = random_scorecard(
                rng, f"scorer-{rng.randint(1, 4)}", when
            )
        elif kind in (EventKind.GATE_PASS, EventKind.GATE_RETURN):
            result = compute_civps(state.scorecards)
            threshold = result.overall if kind is EventKind.GATE_PASS else 10.0
            outcome = gate_decision(result, threshold)
            payload["outcome"] = outcome
        elif kind is EventKind.ROADMAP:
            payload["estimate"] = EffortImpactEstimate(
                effort=rng.randint(1, 10), impact=rng.randint(1, 10)
            )
        event = FunnelEvent(kind=kind, actor=f"actor-{rng.randint(1, 3)}", at=when, **payload)
        state = advance(state, event)
        events.append(event)
    return events, state


def random_mc_config(rng: random.Random, max_n: int = 200_000) -> McConfig:
    return McConfig(
        c_incident=round(rng.uniform(0, 5_000_000), 2),
        p_incident=rng.random(),
        c_investment=round(rng.uniform(0, 1_000_000), 2),
        r_investment=rng.random(),
        n=rng.randint(1, max_n),
        seed=rng.getrandbits(64),
        semantics=rng.choice(list(McSemantics)),
    )


def random_portfolio(rng: random.Random, max_ideas: int = 6) -> Portfolio:
    ideas: list[Idea] = []
    events: dict[str, tuple[FunnelEvent, ...]] = {}
    for index in range(rng.randint(0, max_ideas)):
        idea = make_idea(
            f"idea-{rng.getrandbits(48):012x}-{index}",
            rng.choice(CATEGORIES),
            title=f"Random idea {index}",
            when=T0 + timedelta(hours=index),
        )
        if rng.random() < 0.4:
            idea = idea.model_copy(
                update={
                    "civps_threshold_override": round(rng.uniform(1, 10), 2),
                    "mc_config": random_mc_config(rng, max_n=10_000),
                }
            )
        walk, final = random_legal_walk(rng, idea)
        ideas.append(final)
        if walk:
            events[idea.id] = tuple(walk)
    return Portfolio(ideas=tuple(ideas), events=events)
