"""The three closed-form value formulas and the composite report.

Risk reduction is a signed monetary value; efficiency and cost-benefit are
dimensionless ratios with a division singularity excluded at input
validation (strictly positive denominators). The composite report juxtaposes
whatever can be evaluated for an idea; it never merges the values into one
scalar and never defaults a missing section to zero.
"""

from __future__ import annotations

from typing import Optional

from .model import (
    CostBenefitInput,
    DomainModel,
    EfficiencyInput,
    Idea,
    RiskReductionInput,
)
from .montecarlo import McResult, simulate_bv
from .scoring import CIVPSResult, compute_civps


def risk_reduction_value(input: RiskReductionInput) -> float:
    """Loss delta scaled by the probability reduction; negative when losses grew."""
    return (input.pl_before - input.pl_after) * input.p_reduction


def operational_efficiency_value(input: EfficiencyInput) -> float:
    """Operational gains net of implementation cost, relative to that cost."""
    return (input.g_operational - input.c_implementation) / input.c_implementation


def cost_benefit_value(input: CostBenefitInput) -> float:
    """Savings net of total costs, relative to total costs."""
    return (input.total_savings - input.total_costs) / input.total_costs


class CompositeValueReport(DomainModel):
    """Every value measure available for one idea, side by side.

    A section is ``None`` exactly when its inputs are missing; those section
    names are repeated in ``not_evaluated`` so a null is never read as zero.
    """

    idea_id: str
    civps: Optional[CIVPSResult] = None
    rrv: Optional[float] = None
    oev: Optional[float] = None
    cbv: Optional[float] = None
    mc: Optional[McResult] = None
    not_evaluated: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()


def composite_value_report(idea: Idea) -> CompositeValueReport:
    """Evaluate every section whose inputs are present on the idea.

    The simulation section is recomputed from the idea's attached config;
    results are reproducible because the config pins the seed.
    """
    civps: Optional[CIVPSResult] = None
    rrv = oev = cbv = None
    mc: Optional[McResult] = None
    missing: list[str] = []
    warnings: list[str] = []

    if idea.scorecards:
        civps = compute_civps(idea.scorecards)
    else:
        missing.append("civps")

    quant = idea.quant_inputs
    if quant is not None and quant.rrv is not None:
        rrv = risk_reduction_value(quant.rrv)
        if rrv < 0:
            warnings.append(
                "risk reduction value is negative: pl_after exceeds pl_before"
            )
    else:
        missing.append("rrv")
    if quant is not None and quant.oev is not None:
        oev = operational_efficiency_value(quant.oev)
    else:
        missing.append("oev")
    if quant is not None and quant.cbv is not None:
        cbv = cost_benefit_value(quant.cbv)
    else:
        missing.append("cbv")

    if idea.mc_config is not None:
        mc = simulate_bv(idea.mc_config)
    else:
        missing.append("mc")

    return CompositeValueReport(
        idea_id=idea.id,
        civps=civps,
        rrv=rrv,
        oev=oev,
        cbv=cbv,
        mc=mc,
        not_evaluated=tuple(missing),
        warnings=tuple(warnings),
    )
