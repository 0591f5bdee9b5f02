"""Category-mix audit against a target allocation.

The mix is counted over idea headcount, not value. Rejected ideas drop out
of the default slice; returned-for-refinement ideas stay in, since they
remain live pipeline. A second slice restricted to executing/realized ideas
answers whether the mix holds where money is actually committed.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import Annotated, Optional

from pydantic import Field, model_validator

from .model import DomainModel, Idea, InnovationCategory, Probability, StageState

ALLOCATION_SUM_TOL = 1e-9

EXECUTED_STAGES = frozenset({StageState.IN_EXECUTION, StageState.VALUE_REALIZED})


class AllocationTarget(DomainModel):
    """Target fraction per category; the four fractions must sum to 1.

    Construction enforces the sum, so any reachable target is valid.
    """

    fractions: dict[InnovationCategory, Probability]

    @model_validator(mode="after")
    def _complete_and_normalized(self) -> "AllocationTarget":
        missing = [c.value for c in InnovationCategory if c not in self.fractions]
        if missing:
            raise ValueError(f"allocation target missing categories: {missing}")
        total = sum(self.fractions.values())
        if abs(total - 1.0) > ALLOCATION_SUM_TOL:
            raise ValueError(f"allocation fractions must sum to 1, got {total!r}")
        return self


DEFAULT_ALLOCATION_TARGET = AllocationTarget(
    fractions={
        InnovationCategory.SUSTAINING: 0.45,
        InnovationCategory.INCREMENTAL: 0.40,
        InnovationCategory.DISRUPTIVE: 0.10,
        InnovationCategory.TRANSFORMATIVE: 0.05,
    }
)


class PortfolioReport(DomainModel):
    """Actual category mix vs. target, with signed deviations.

    An empty slice reports zero counts, zero fractions, zero deviations, and
    sets the ``empty`` flag rather than pretending a mix exists.
    """

    total_ideas: Annotated[int, Field(ge=0)]
    counts: dict[InnovationCategory, int]
    fractions: dict[InnovationCategory, float]
    target: AllocationTarget
    deviations: dict[InnovationCategory, float]
    empty: bool


def allocation_report(
    ideas: Iterable[Idea],
    target: AllocationTarget = DEFAULT_ALLOCATION_TARGET,
    *,
    stages: Optional[frozenset[StageState]] = None,
) -> PortfolioReport:
    """Audit the category mix of one portfolio slice.

    ``stages`` restricts the slice; the default slice is every idea that is
    not rejected.
    """
    counts = {category: 0 for category in InnovationCategory}
    for idea in ideas:
        if stages is None:
            if idea.stage is StageState.REJECTED:
                continue
        elif idea.stage not in stages:
            continue
        counts[idea.category] += 1
    total = sum(counts.values())
    if total == 0:
        zeros = {category: 0.0 for category in InnovationCategory}
        return PortfolioReport(
            total_ideas=0,
            counts=counts,
            fractions=zeros,
            target=target,
            deviations=dict(zeros),
            empty=True,
        )
    fractions = {category: counts[category] / total for category in InnovationCategory}
    deviations = {
        category: fractions[category] - target.fractions[category]
        for category in InnovationCategory
    }
    return PortfolioReport(
        total_ideas=total,
        counts=counts,
        fractions=fractions,
        target=target,
        deviations=deviations,
        empty=False,
    )
