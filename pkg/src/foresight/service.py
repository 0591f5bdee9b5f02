"""Portfolio operations shared by the HTTP API and the CLI.

All reads work on the store's current immutable snapshot; all mutations are
funneled through the store's single writer and persist before returning.
Simulations are pure reads: an ad-hoc run never touches the portfolio, and
attaching a config to an idea runs the simulation outside the write lock.
"""

from __future__ import annotations

import uuid
from collections.abc import Callable
from datetime import datetime
from typing import Optional

from pydantic import ValidationError

from . import funnel, montecarlo, roadmap, scoring, values
from .allocation import EXECUTED_STAGES, allocation_report
from .errors import DomainValidationError, EventConsistencyError, NotFoundError
from .model import (
    Idea,
    InnovationCategory,
    McConfig,
    Scorecard,
    StageState,
    utcnow,
    validate_idea,
)
from .schemas import (
    AdvanceRequest,
    AdvanceResponse,
    AllocationResponse,
    CivpsResponse,
    CompositeValueReport,
    HistoryResponse,
    IdeaCreateRequest,
    IdeaDetailResponse,
    IdeaListResponse,
    QuadrantsResponse,
    ScorecardCreateRequest,
    SimulateRequest,
    SimulateResponse,
    SweepRequest,
    SweepResponse,
)
from .store import Portfolio, PortfolioStore


class PortfolioService:
    """Every domain operation, bound to one portfolio store."""

    def __init__(self, store: PortfolioStore, clock: Callable[[], datetime] = utcnow):
        self._store = store
        self._clock = clock

    @property
    def portfolio(self) -> Portfolio:
        return self._store.snapshot

    # -- lookups ---------------------------------------------------------

    def _find(self, portfolio: Portfolio, idea_id: str) -> tuple[int, Idea]:
        for index, idea in enumerate(portfolio.ideas):
            if idea.id == idea_id:
                return index, idea
        raise NotFoundError(f"idea {idea_id!r} not found")

    def get_idea(self, idea_id: str) -> Idea:
        return self._find(self.portfolio, idea_id)[1]

    def list_ideas(
        self,
        stage: Optional[StageState] = None,
        category: Optional[InnovationCategory] = None,
        limit: Optional[int] = None,
        offset: int = 0,
    ) -> IdeaListResponse:
        ideas = [
            idea
            for idea in self.portfolio.ideas
            if (stage is None or idea.stage is stage)
            and (category is None or idea.category is category)
        ]
        total = len(ideas)
        window = ideas[offset:]
        if limit is not None:
            window = window[:limit]
        return IdeaListResponse(total=total, ideas=tuple(window))

    def idea_detail(self, idea_id: str) -> IdeaDetailResponse:
        portfolio = self.portfolio
        idea = self._find(portfolio, idea_id)[1]
        config = portfolio.config
        civps = scoring.compute_civps(idea.scorecards) if idea.scorecards else None
        decision = None
        recommendation = None
        if idea.estimate is not None:
            decision = roadmap.classify_quadrant(
                idea.estimate, config.effort_threshold, config.impact_threshold
            )
            recommendation = roadmap.recommend(
                decision, civps, idea.category, config.top_tier_threshold
            )
        return IdeaDetailResponse(
            **idea.model_dump(),
            legal_events=funnel.legal_events(idea.stage),
            civps=civps,
            decision=decision,
            recommendation=recommendation,
        )

    # -- mutations -------------------------------------------------------

    def create_idea(self, request: IdeaCreateRequest) -> Idea:
        now = self._clock()
        idea = Idea(
            id=uuid.uuid4().hex,
            title=request.title,
            description=request.description,
            category=request.category,
            originator=request.originator,
            created_at=now,
            updated_at=now,
            civps_threshold_override=request.civps_threshold_override,
            quant_inputs=request.quant_inputs,
            mc_config=request.mc_config,
        )
        violations = validate_idea(idea)
        if violations:
            first = violations[0]
            raise DomainValidationError(
                "; ".join(v.message for v in violations), path=first.path
            )
        self._store.mutate(
            lambda p: p.model_copy(update={"ideas": p.ideas + (idea,)})
        )
        return idea

    def _apply_event(self, idea_id: str, event: funnel.FunnelEvent) -> Idea:
        def fn(portfolio: Portfolio) -> Portfolio:
            index, idea = self._find(portfolio, idea_id)
            updated = funnel.advance(
                idea, event, quorum=portfolio.config.scoring_quorum
            )
            ideas = (
                portfolio.ideas[:index] + (updated,) + portfolio.ideas[index + 1 :]
            )
            events = dict(portfolio.events)
            events[idea_id] = events.get(idea_id, ()) + (event,)
            return portfolio.model_copy(update={"ideas": ideas, "events": events})

        return self._find(self._store.mutate(fn), idea_id)[1]

    def add_scorecard(self, idea_id: str, request: ScorecardCreateRequest) -> Idea:
        card = Scorecard(**request.model_dump(), submitted_at=self._clock())
        event = funnel.FunnelEvent(
            kind=funnel.EventKind.SUBMIT_SCORES,
            actor=request.scorer_id,
            at=card.submitted_at,
            scorecard=card,
        )
        return self._apply_event(idea_id, event)

    def _effective_threshold(self, idea: Idea) -> float:
        if idea.civps_threshold_override is not None:
            return idea.civps_threshold_override
        return self.portfolio.config.civps_threshold

    def advance(self, idea_id: str, request: AdvanceRequest) -> AdvanceResponse:
        portfolio = self.portfolio
        idea = self._find(portfolio, idea_id)[1]
        config = portfolio.config
        now = self._clock()
        kind = request.kind

        scorecard = None
        if request.scorecard is not None:
            scorecard = Scorecard(**request.scorecard.model_dump(), submitted_at=now)

        outcome = request.outcome
        if (
            kind in (funnel.EventKind.GATE_PASS, funnel.EventKind.GATE_RETURN)
            and outcome is None
            and idea.scorecards
        ):
            result = scoring.compute_civps(idea.scorecards)
            outcome = scoring.gate_decision(result, self._effective_threshold(idea))

        estimate = request.estimate
        decision = request.decision
        if kind is funnel.EventKind.ROADMAP:
            if estimate is None:
                estimate = idea.estimate
            if decision is None and estimate is not None:
                decision = roadmap.classify_quadrant(
                    estimate, config.effort_threshold, config.impact_threshold
                )

        try:
            event = funnel.FunnelEvent(
                kind=kind,
                actor=request.actor,
                at=now,
                category=request.category,
                scorecard=scorecard,
                outcome=outcome,
                estimate=estimate,
                decision=decision,
            )
        except ValidationError as exc:
            raise EventConsistencyError(str(exc.errors()[0]["msg"])) from exc
        updated = self._apply_event(idea_id, event)
        return AdvanceResponse(idea=updated, event=event)

    # -- scoring and reports ----------------------------------------------

    def civps(self, idea_id: str) -> CivpsResponse:
        idea = self.get_idea(idea_id)
        if not idea.scorecards:
            raise DomainValidationError(f"idea {idea_id!r} has no scorecards")
        result = scoring.compute_civps(idea.scorecards)
        gate = scoring.gate_decision(result, self._effective_threshold(idea))
        return CivpsResponse(idea_id=idea_id, result=result, gate=gate)

    def history(self, idea_id: str) -> HistoryResponse:
        portfolio = self.portfolio
        self._find(portfolio, idea_id)
        return HistoryResponse(
            idea_id=idea_id, events=portfolio.events.get(idea_id, ())
        )

    def report(self, idea_id: str) -> CompositeValueReport:
        return values.composite_value_report(self.get_idea(idea_id))

    def allocation(self) -> AllocationResponse:
        portfolio = self.portfolio
        target = portfolio.config.allocation_target
        return AllocationResponse(
            live=allocation_report(portfolio.ideas, target),
            executed=allocation_report(portfolio.ideas, target, stages=EXECUTED_STAGES),
        )

    def quadrants(self) -> QuadrantsResponse:
        portfolio = self.portfolio
        config = portfolio.config
        points = []
        for idea in portfolio.ideas:
            if idea.estimate is None or idea.stage is StageState.REJECTED:
                continue
            decision = roadmap.classify_quadrant(
                idea.estimate, config.effort_threshold, config.impact_threshold
            )
            points.append(
                roadmap.QuadrantPoint(
                    idea_id=idea.id,
                    title=idea.title,
                    effort=idea.estimate.effort,
                    impact=idea.estimate.impact,
                    decision=decision,
                )
            )
        return QuadrantsResponse(points=tuple(points))

    # -- simulation --------------------------------------------------------

    def _build_config(self, request: SimulateRequest) -> McConfig:
        defaults = self.portfolio.config.mc_defaults
        return McConfig(
            c_incident=request.c_incident,
            p_incident=request.p_incident,
            c_investment=request.c_investment,
            r_investment=request.r_investment,
            n=request.n if request.n is not None else defaults.n,
            seed=request.seed,
            semantics=(
                request.semantics if request.semantics is not None else defaults.semantics
            ),
        )

    def _run(self, config: McConfig) -> SimulateResponse:
        result = montecarlo.simulate_bv(config)
        return SimulateResponse(
            **result.model_dump(),
            config=config,
            expected_bv=montecarlo.closed_form_expectation(config),
            histogram=montecarlo.histogram_bins(config, result),
        )

    def simulate_adhoc(self, request: SimulateRequest) -> SimulateResponse:
        """What-if run; never persisted."""
        return self._run(self._build_config(request))

    def simulate_idea(
        self, idea_id: str, request: Optional[SimulateRequest] = None
    ) -> SimulateResponse:
        """Simulate an idea and persist the config used as its attached config."""
        idea = self.get_idea(idea_id)
        if request is not None:
            config = self._build_config(request)
        elif idea.mc_config is not None:
            config = idea.mc_config
        else:
            raise DomainValidationError(
                f"idea {idea_id!r} has no simulation config and no override was given"
            )
        response = self._run(config)
        now = self._clock()

        def fn(portfolio: Portfolio) -> Portfolio:
            index, current = self._find(portfolio, idea_id)
            updated = current.model_copy(
                update={"mc_config": config, "updated_at": now}
            )
            ideas = (
                portfolio.ideas[:index] + (updated,) + portfolio.ideas[index + 1 :]
            )
            return portfolio.model_copy(update={"ideas": ideas})

        self._store.mutate(fn)
        return response

    def sweep(self, request: SweepRequest) -> SweepResponse:
        defaults = self.portfolio.config.mc_defaults
        grid = montecarlo.McGrid(
            c_incident=request.c_incident,
            p_incident=request.p_incident,
            c_investment=request.c_investment,
            r_investment=request.r_investment,
            n=request.n if request.n is not None else (defaults.n,),
            semantics=(
                request.semantics
                if request.semantics is not None
                else (defaults.semantics,)
            ),
            master_seed=request.master_seed,
        )
        return SweepResponse(
            master_seed=grid.master_seed, entries=montecarlo.sweep(grid)
        )
