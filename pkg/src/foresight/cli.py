"""Command-line client over the same service layer the HTTP API uses.

Every subcommand that touches data needs a portfolio file, given with
``--portfolio`` or the ``FORESIGHT_PORTFOLIO`` environment variable.
``--format json`` always prints the exact payload the corresponding API
endpoint would return. Exit codes: 0 success, 1 domain/validation error,
2 usage error.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path
from typing import Optional

import click
from pydantic import ValidationError

from . import render
from .api import serve as run_server
from .errors import ForesightError
from .model import (
    EffortImpactEstimate,
    InnovationCategory,
    McSemantics,
    QuantInputs,
    McConfig,
    StageState,
)
from .roadmap import classify_quadrant
from .schemas import (
    AdvanceRequest,
    IdeaCreateRequest,
    ScorecardCreateRequest,
    SimulateRequest,
    SweepRequest,
)
from .service import PortfolioService
from .store import PortfolioStore

CATEGORY_CHOICES = click.Choice([c.value for c in InnovationCategory])
STAGE_CHOICES = click.Choice([s.value for s in StageState])
SEMANTICS_CHOICES = click.Choice([s.value for s in McSemantics])


def domain_errors(command):
    """Convert domain errors into exit code 1 with the message on stderr."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ForesightError as exc:
            raise click.ClickException(str(exc)) from exc
        except ValidationError as exc:
            first = exc.errors()[0]
            where = ".".join(str(piece) for piece in first["loc"])
            raise click.ClickException(f"{where}: {first['msg']}") from exc

    return wrapper


def _floats(_ctx, _param, value: Optional[str]) -> Optional[tuple[float, ...]]:
    if value is None:
        return None
    try:
        return tuple(float(piece) for piece in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated numbers, got {value!r}")


def _ints(_ctx, _param, value: Optional[str]) -> Optional[tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(int(piece) for piece in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


@click.group()
@click.option(
    "--portfolio",
    "portfolio_path",
    envvar="FORESIGHT_PORTFOLIO",
    type=click.Path(path_type=Path),
    default=None,
    help="Portfolio file (or set FORESIGHT_PORTFOLIO).",
)
@click.pass_context
def cli(ctx: click.Context, portfolio_path: Optional[Path]) -> None:
    """Manage and evaluate a cybersecurity innovation portfolio."""
    ctx.obj = portfolio_path


def _service(ctx: click.Context, *, create: bool = False) -> PortfolioService:
    path: Optional[Path] = ctx.obj
    if path is None:
        raise click.UsageError(
            "a portfolio file is required: pass --portfolio or set FORESIGHT_PORTFOLIO"
        )
    store = PortfolioStore.open(path, create_if_missing=create)
    return PortfolioService(store)


def _echo_json(model) -> None:
    click.echo(model.model_dump_json(indent=2))


# -- idea ---------------------------------------------------------------------


@cli.group()
def idea() -> None:
    """Create and inspect ideas."""


@idea.command("add")
@click.option("--title", required=True)
@click.option("--description", default="")
@click.option("--category", type=CATEGORY_CHOICES, required=True)
@click.option("--originator", required=True)
@click.option("--civps-threshold", type=float, default=None, help="Per-idea gate override.")
@click.option("--quant-json", default=None, help="QuantInputs as inline JSON.")
@click.option("--mc-json", default=None, help="Simulation config as inline JSON.")
@click.pass_context
@domain_errors
def idea_add(
    ctx: click.Context,
    title: str,
    description: str,
    category: str,
    originator: str,
    civps_threshold: Optional[float],
    quant_json: Optional[str],
    mc_json: Optional[str],
) -> None:
    """Add a draft idea to the portfolio (creates the file if missing)."""
    service = _service(ctx, create=True)
    request = IdeaCreateRequest(
        title=title,
        description=description,
        category=InnovationCategory(category),
        originator=originator,
        civps_threshold_override=civps_threshold,
        quant_inputs=QuantInputs.model_validate_json(quant_json) if quant_json else None,
        mc_config=McConfig.model_validate_json(mc_json) if mc_json else None,
    )
    _echo_json(service.create_idea(request))


@idea.command("list")
@click.option("--stage", type=STAGE_CHOICES, default=None)
@click.option("--category", type=CATEGORY_CHOICES, default=None)
@click.option("--limit", type=int, default=None)
@click.option("--offset", type=int, default=0)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
@domain_errors
def idea_list(
    ctx: click.Context,
    stage: Optional[str],
    category: Optional[str],
    limit: Optional[int],
    offset: int,
    fmt: str,
) -> None:
    """List ideas, optionally filtered by stage or category."""
    service = _service(ctx)
    response = service.list_ideas(
        stage=StageState(stage) if stage else None,
        category=InnovationCategory(category) if category else None,
        limit=limit,
        offset=offset,
    )
    if fmt == "json":
        _echo_json(response)
    else:
        click.echo(render.idea_table(response.ideas))


@idea.command("show")
@click.argument("idea_id")
@click.pass_context
@domain_errors
def idea_show(ctx: click.Context, idea_id: str) -> None:
    """Show one idea with its legal next events and recommendation."""
    _echo_json(_service(ctx).idea_detail(idea_id))


# -- score ----------------------------------------------------------------------


@cli.group()
def score() -> None:
    """Submit forum scorecards."""


@score.command("add")
@click.argument("idea_id")
@click.option("--scorer", required=True)
@click.option("--revenue", type=int, required=True)
@click.option("--cost-efficiency", type=int, required=True)
@click.option("--operational-efficiency", type=int, required=True)
@click.option("--risk-mitigation", type=int, required=True)
@click.option("--trust-building", type=int, required=True)
@click.option("--strategic-alignment", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
@domain_errors
def score_add(
    ctx: click.Context,
    idea_id: str,
    scorer: str,
    revenue: int,
    cost_efficiency: int,
    operational_efficiency: int,
    risk_mitigation: int,
    trust_building: int,
    strategic_alignment: int,
    fmt: str,
) -> None:
    """Record one scorer's six 1-10 dimension scores for an idea."""
    service = _service(ctx)
    request = ScorecardCreateRequest(
        scorer_id=scorer,
        revenue=revenue,
        cost_efficiency=cost_efficiency,
        operational_efficiency=operational_efficiency,
        risk_mitigation=risk_mitigation,
        trust_building=trust_building,
        strategic_alignment=strategic_alignment,
    )
    updated = service.add_scorecard(idea_id, request)
    if fmt == "json":
        _echo_json(updated)
    else:
        click.echo(
            f"scorecard recorded for idea {idea_id}"
            f" ({len(updated.scorecards)} scorecard(s) on file)"
        )


# -- scoring / reports ----------------------------------------------------------


@cli.command()
@click.argument("idea_id")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
@domain_errors
def civps(ctx: click.Context, idea_id: str, fmt: str) -> None:
    """Aggregate an idea's scorecards and show the gate decision."""
    response = _service(ctx).civps(idea_id)
    if fmt == "json":
        _echo_json(response)
    else:
        click.echo(render.civps_text(response))


@cli.command()
@click.argument("idea_id")
@click.option(
    "--format", "fmt", type=click.Choice(["markdown", "csv", "json"]), default="markdown"
)
@click.pass_context
@domain_errors
def report(ctx: click.Context, idea_id: str, fmt: str) -> None:
    """Composite value report: CIVPS, formulas, and simulation side by side."""
    service = _service(ctx)
    response = service.report(idea_id)
    currency = service.portfolio.currency_label
    if fmt == "json":
        _echo_json(response)
    elif fmt == "csv":
        click.echo(render.report_csv(response, currency), nl=False)
    else:
        click.echo(render.report_markdown(response, currency), nl=False)


# -- funnel -----------------------------------------------------------------------


@cli.command()
@click.argument("idea_id")
@click.option("--event", "kind", required=True, help="Event kind, e.g. categorize.")
@click.option("--actor", required=True)
@click.option("--category", type=CATEGORY_CHOICES, default=None)
@click.option("--effort", type=int, default=None, help="Estimate for roadmap events.")
@click.option("--impact", type=int, default=None, help="Estimate for roadmap events.")
@click.option("--effort-notes", default="")
@click.option("--impact-notes", default="")
@click.pass_context
@domain_errors
def advance(
    ctx: click.Context,
    idea_id: str,
    kind: str,
    actor: str,
    category: Optional[str],
    effort: Optional[int],
    impact: Optional[int],
    effort_notes: str,
    impact_notes: str,
) -> None:
    """Apply a funnel event to an idea (gate outcomes are computed server-side)."""
    from .funnel import EventKind

    estimate = None
    if effort is not None or impact is not None:
        if effort is None or impact is None:
            raise click.UsageError("--effort and --impact must be given together")
        estimate = EffortImpactEstimate(
            effort=effort, impact=impact, effort_notes=effort_notes, impact_notes=impact_notes
        )
    try:
        event_kind = EventKind(kind)
    except ValueError:
        raise click.UsageError(f"unknown event kind {kind!r}")
    request = AdvanceRequest(
        kind=event_kind,
        actor=actor,
        category=InnovationCategory(category) if category else None,
        estimate=estimate,
    )
    _echo_json(_service(ctx).advance(idea_id, request))


@cli.command()
@click.argument("idea_id")
@click.pass_context
@domain_errors
def history(ctx: click.Context, idea_id: str) -> None:
    """Show an idea's full event history."""
    _echo_json(_service(ctx).history(idea_id))


# -- simulation ---------------------------------------------------------------------


@cli.command()
@click.option("--idea", "idea_id", default=None, help="Simulate and persist for this idea.")
@click.option("--c-incident", type=float, default=None)
@click.option("--p-incident", type=float, default=None)
@click.option("--c-investment", type=float, default=None)
@click.option("--r-investment", type=float, default=None)
@click.option("--n", type=int, default=None)
@click.option("--seed", type=int, default=None, help="Required for reproducible output.")
@click.option("--semantics", type=SEMANTICS_CHOICES, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--histogram-out", type=click.Path(path_type=Path), default=None)
@click.pass_context
@domain_errors
def simulate(
    ctx: click.Context,
    idea_id: Optional[str],
    c_incident: Optional[float],
    p_incident: Optional[float],
    c_investment: Optional[float],
    r_investment: Optional[float],
    n: Optional[int],
    seed: Optional[int],
    semantics: Optional[str],
    fmt: str,
    histogram_out: Optional[Path],
) -> None:
    """Run the business-value simulation, ad hoc or against an idea.

    Ad-hoc runs never persist. With --idea the config used is persisted as
    the idea's attached simulation config; omit all parameter flags to rerun
    the attached config.
    """
    service = _service(ctx)
    core = (c_incident, p_incident, c_investment, r_investment, seed)
    request = None
    if any(value is not None for value in core):
        if any(value is None for value in core):
            raise click.UsageError(
                "simulation parameters must be given together:"
                " --c-incident --p-incident --c-investment --r-investment --seed"
            )
        request = SimulateRequest(
            c_incident=c_incident,
            p_incident=p_incident,
            c_investment=c_investment,
            r_investment=r_investment,
            n=n,
            seed=seed,
            semantics=McSemantics(semantics) if semantics else None,
        )
    if idea_id is None:
        if request is None:
            raise click.UsageError("ad-hoc simulate requires the parameter flags")
        response = service.simulate_adhoc(request)
    else:
        response = service.simulate_idea(idea_id, request)

    if histogram_out is not None:
        histogram_out.write_text(
            json.dumps(
                {"bins": [bin.model_dump(mode="json") for bin in response.histogram]},
                indent=2,
            )
            + "\n",
            encoding="utf-8",
        )
    if fmt == "json":
        _echo_json(response)
    else:
        click.echo(render.simulate_text(response, service.portfolio.currency_label))


@cli.command()
@click.option("--c-incident", callback=_floats, required=True, help="Comma-separated list.")
@click.option("--p-incident", callback=_floats, required=True, help="Comma-separated list.")
@click.option("--c-investment", callback=_floats, required=True, help="Comma-separated list.")
@click.option("--r-investment", callback=_floats, required=True, help="Comma-separated list.")
@click.option("--n", callback=_ints, default=None, help="Comma-separated list.")
@click.option("--semantics", "semantics", type=SEMANTICS_CHOICES, multiple=True)
@click.option("--master-seed", type=int, default=0)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(path_type=Path), default=None)
@click.pass_context
@domain_errors
def sweep(
    ctx: click.Context,
    c_incident: tuple[float, ...],
    p_incident: tuple[float, ...],
    c_investment: tuple[float, ...],
    r_investment: tuple[float, ...],
    n: Optional[tuple[int, ...]],
    semantics: tuple[str, ...],
    master_seed: int,
    fmt: str,
    out: Optional[Path],
) -> None:
    """What-if sweep over a parameter grid; cell seeds derive from the master seed."""
    service = _service(ctx)
    request = SweepRequest(
        c_incident=c_incident,
        p_incident=p_incident,
        c_investment=c_investment,
        r_investment=r_investment,
        n=n,
        semantics=tuple(McSemantics(s) for s in semantics) or None,
        master_seed=master_seed,
    )
    response = service.sweep(request)
    text = (
        response.model_dump_json(indent=2) + "\n"
        if fmt == "json"
        else render.sweep_csv(response.entries)
    )
    if out is not None:
        out.write_text(text, encoding="utf-8")
        click.echo(f"wrote {len(response.entries)} sweep cells to {out}")
    else:
        click.echo(text, nl=False)


# -- quadrants ----------------------------------------------------------------------


@cli.command()
@click.option("--effort", type=int, default=None)
@click.option("--impact", type=int, default=None)
@click.option("--effort-threshold", type=int, default=5)
@click.option("--impact-threshold", type=int, default=5)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.pass_context
@domain_errors
def quadrant(
    ctx: click.Context,
    effort: Optional[int],
    impact: Optional[int],
    effort_threshold: int,
    impact_threshold: int,
    fmt: str,
) -> None:
    """Classify one effort/impact pair, or plot every estimated idea."""
    if effort is not None or impact is not None:
        if effort is None or impact is None:
            raise click.UsageError("--effort and --impact must be given together")
        estimate = EffortImpactEstimate(effort=effort, impact=impact)
        decision = classify_quadrant(estimate, effort_threshold, impact_threshold)
        if fmt == "json":
            _echo_json(decision)
        else:
            click.echo(render.quadrant_text(decision))
        return
    response = _service(ctx).quadrants()
    if fmt == "json":
        _echo_json(response)
    elif fmt == "csv":
        click.echo(render.quadrants_csv(response.points), nl=False)
    else:
        click.echo(render.quadrants_table(response.points))


# -- portfolio ----------------------------------------------------------------------


@cli.group()
def portfolio() -> None:
    """Portfolio-level analytics."""


@portfolio.command("allocation")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.pass_context
@domain_errors
def portfolio_allocation(ctx: click.Context, fmt: str) -> None:
    """Category mix against the target allocation, live and executed slices."""
    response = _service(ctx).allocation()
    if fmt == "json":
        _echo_json(response)
    elif fmt == "csv":
        click.echo(render.allocation_csv(response), nl=False)
    else:
        click.echo(render.allocation_text(response))


# -- server ------------------------------------------------------------------------


@cli.command()
@click.option(
    "--bind",
    envvar="FORESIGHT_BIND",
    default="127.0.0.1:8000",
    help="host:port to listen on (or set FORESIGHT_BIND).",
)
@click.pass_context
@domain_errors
def serve(ctx: click.Context, bind: str) -> None:
    """Serve the HTTP API for the browser UI and other clients."""
    path: Optional[Path] = ctx.obj
    if path is None:
        raise click.UsageError(
            "a portfolio file is required: pass --portfolio or set FORESIGHT_PORTFOLIO"
        )
    run_server(path, bind)


main = cli

if __name__ == "__main__":
    main()
