"""Monte Carlo estimation of business value under uncertainty.

Each iteration draws one uniform number in [0, 1) and marks the incident
"prevented" when the draw falls below the effective probability selected by
the semantics mode; the iteration's savings are then
``c_incident * indicator - c_investment``. Per-iteration savings therefore
take only two values, so the mean, standard deviation, and percentiles all
have exact closed forms in the prevented count.

Reproducibility contract: iterations are processed in fixed-size chunks and
chunk ``i`` uses its own PRNG stream derived from ``(seed, i)``. Chunk counts
are integers, so their sum is independent of execution order and the result
is bitwise identical for any worker count. The stream derivation scheme is
named in ``GENERATOR_ID``; only an implementation using the same generator
reproduces traces bit for bit, while the closed-form expectation is
implementation-independent.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Annotated, Iterable

import numpy as np
from pydantic import Field

from .errors import BudgetExceededError
from .model import (
    DomainModel,
    McConfig,
    McSemantics,
    Money,
    Probability,
    Seed,
)

CHUNK_SIZE = 65536
GENERATOR_ID = f"numpy.PCG64/SeedSequence(seed,chunk_index)/chunk={CHUNK_SIZE}"
PERCENTILE_LEVELS = (5, 25, 50, 75, 95)

# 128 MiB of float64 per-iteration savings; beyond this a full trace must be
# refused (aggregation itself always streams and has no such limit).
DEFAULT_TRACE_BUDGET_BYTES = 128 * 2**20

DEFAULT_SWEEP_CAP = 10_000


class McResult(DomainModel):
    """Summary statistics of one simulation run.

    ``std_dev`` is the population standard deviation of the per-iteration
    savings; ``percentiles`` uses the nearest-rank (inverse empirical CDF)
    definition, exact here because the savings distribution is two-point.
    """

    mean_bv: float
    std_dev: Annotated[float, Field(ge=0)]
    percentiles: dict[int, float]
    prevented_count: Annotated[int, Field(ge=0)]
    n: Annotated[int, Field(ge=1)]
    seed: Seed
    semantics: McSemantics
    generator_id: str


class HistogramBin(DomainModel):
    """One support point of the two-point savings distribution."""

    savings: float
    count: Annotated[int, Field(ge=0)]


def effective_probability(config: McConfig) -> float:
    """Per-iteration probability that the prevented indicator fires."""
    if config.semantics is McSemantics.RESIDUAL_INCIDENT:
        return config.p_incident * (1.0 - config.r_investment)
    return config.p_incident * config.r_investment


def closed_form_expectation(config: McConfig) -> float:
    """Analytic expectation of the per-iteration savings (n and seed ignored)."""
    return config.c_incident * effective_probability(config) - config.c_investment


def savings_support(config: McConfig) -> tuple[float, float]:
    """The two possible per-iteration savings values (not prevented, prevented)."""
    return -config.c_investment, config.c_incident - config.c_investment


def _chunk_lengths(n: int) -> Iterable[tuple[int, int]]:
    for index in range(0, (n + CHUNK_SIZE - 1) // CHUNK_SIZE):
        yield index, min(CHUNK_SIZE, n - index * CHUNK_SIZE)


def _chunk_uniforms(seed: int, chunk_index: int, length: int) -> np.ndarray:
    stream = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, chunk_index])))
    return stream.random(length)


def _nearest_rank_percentile(q: int, n: int, prevented: int, s0: float, s1: float) -> float:
    # Sorted savings are (n - prevented) copies of s0 followed by prevented
    # copies of s1 (s0 <= s1 since c_incident >= 0). Integer ceil avoids
    # float boundary errors at exact ranks.
    rank = (q * n + 99) // 100
    return s0 if rank <= n - prevented else s1


def simulate_bv(config: McConfig, *, workers: int = 1) -> McResult:
    """Run the simulation and aggregate per the two-point closed forms.

    ``workers`` only chooses how many threads process chunks; any value
    yields a bitwise-identical result for the same config.
    """
    p_eff = effective_probability(config)

    def count_chunk(item: tuple[int, int]) -> int:
        index, length = item
        draws = _chunk_uniforms(config.seed, index, length)
        return int(np.count_nonzero(draws < p_eff))

    chunks = list(_chunk_lengths(config.n))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            prevented = sum(pool.map(count_chunk, chunks))
    else:
        prevented = sum(map(count_chunk, chunks))

    n = config.n
    s0, s1 = savings_support(config)
    p_hat = prevented / n
    mean_bv = config.c_incident * p_hat - config.c_investment
    std_dev = config.c_incident * math.sqrt(p_hat * (1.0 - p_hat))
    percentiles = {
        q: _nearest_rank_percentile(q, n, prevented, s0, s1) for q in PERCENTILE_LEVELS
    }
    return McResult(
        mean_bv=mean_bv,
        std_dev=std_dev,
        percentiles=percentiles,
        prevented_count=prevented,
        n=n,
        seed=config.seed,
        semantics=config.semantics,
        generator_id=GENERATOR_ID,
    )


def histogram_bins(config: McConfig, result: McResult) -> tuple[HistogramBin, ...]:
    """Exact outcome histogram: the two savings values with their counts."""
    s0, s1 = savings_support(config)
    return (
        HistogramBin(savings=s0, count=result.n - result.prevented_count),
        HistogramBin(savings=s1, count=result.prevented_count),
    )


def iteration_savings(
    config: McConfig, *, memory_budget_bytes: int = DEFAULT_TRACE_BUDGET_BYTES
) -> np.ndarray:
    """Full per-iteration savings trace, in iteration order.

    Uses the same streams as ``simulate_bv``, so the trace always aggregates
    to the reported result. Refuses traces whose float64 storage would
    exceed the memory budget.
    """
    needed = config.n * 8
    if needed > memory_budget_bytes:
        raise BudgetExceededError(
            f"per-iteration trace needs {needed} bytes,"
            f" exceeding the budget of {memory_budget_bytes} bytes"
        )
    p_eff = effective_probability(config)
    s0, s1 = savings_support(config)
    parts = []
    for index, length in _chunk_lengths(config.n):
        draws = _chunk_uniforms(config.seed, index, length)
        parts.append(np.where(draws < p_eff, s1, s0))
    return np.concatenate(parts)


class McGrid(DomainModel):
    """Cartesian what-if grid over simulation parameters.

    Cell order is the product of the parameter lists in field order; each
    cell's seed is derived from ``(master_seed, cell_index)`` so the whole
    sweep is reproducible from the grid alone.
    """

    c_incident: Annotated[tuple[Money, ...], Field(min_length=1)]
    p_incident: Annotated[tuple[Probability, ...], Field(min_length=1)]
    c_investment: Annotated[tuple[Money, ...], Field(min_length=1)]
    r_investment: Annotated[tuple[Probability, ...], Field(min_length=1)]
    n: Annotated[tuple[Annotated[int, Field(ge=1)], ...], Field(min_length=1)] = (100_000,)
    semantics: Annotated[tuple[McSemantics, ...], Field(min_length=1)] = (
        McSemantics.RESIDUAL_INCIDENT,
    )
    master_seed: Seed = 0


class SweepEntry(DomainModel):
    """One grid cell: its full config (derived seed included) and result."""

    index: Annotated[int, Field(ge=0)]
    config: McConfig
    result: McResult
    expected_bv: float


def derive_seed(master_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([master_seed, index]).generate_state(1, np.uint64)[0])


def sweep(
    grid: McGrid,
    *,
    max_cells: int = DEFAULT_SWEEP_CAP,
    workers: int = 1,
) -> tuple[SweepEntry, ...]:
    """Simulate every cell of the grid; errors out above the cell cap."""
    cells = (
        len(grid.c_incident)
        * len(grid.p_incident)
        * len(grid.c_investment)
        * len(grid.r_investment)
        * len(grid.n)
        * len(grid.semantics)
    )
    if cells > max_cells:
        raise BudgetExceededError(
            f"sweep grid has {cells} cells, exceeding the cap of {max_cells}"
        )
    entries = []
    combos = product(
        grid.c_incident,
        grid.p_incident,
        grid.c_investment,
        grid.r_investment,
        grid.n,
        grid.semantics,
    )
    for index, (c_inc, p_inc, c_inv, r_inv, n, semantics) in enumerate(combos):
        config = McConfig(
            c_incident=c_inc,
            p_incident=p_inc,
            c_investment=c_inv,
            r_investment=r_inv,
            n=n,
            seed=derive_seed(grid.master_seed, index),
            semantics=semantics,
        )
        entries.append(
            SweepEntry(
                index=index,
                config=config,
                result=simulate_bv(config, workers=workers),
                expected_bv=closed_form_expectation(config),
            )
        )
    return tuple(entries)
