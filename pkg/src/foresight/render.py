"""Text, Markdown, and CSV renderings of service responses.

All numeric output uses fixed formats (money 2 decimals, ratios 6, scores
and fractions 4) so CLI output is stable enough for golden-file tests.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable

from .allocation import PortfolioReport
from .model import SCORE_DIMENSIONS, Idea
from .montecarlo import PERCENTILE_LEVELS, SweepEntry
from .roadmap import QuadrantDecision, QuadrantPoint
from .schemas import (
    AllocationResponse,
    CivpsResponse,
    CompositeValueReport,
    SimulateResponse,
)


def money(x: float) -> str:
    return f"{x:,.2f}"


def ratio(x: float) -> str:
    return f"{x:.6f}"


def score(x: float) -> str:
    return f"{x:.4f}"


def fraction(x: float) -> str:
    return f"{x:.4f}"


def _csv_text(rows: Iterable[Iterable[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


# -- ideas ----------------------------------------------------------------


def idea_table(ideas: Iterable[Idea]) -> str:
    lines = [f"{'id':32}  {'stage':23}  {'category':14}  title"]
    for idea in ideas:
        lines.append(
            f"{idea.id:32}  {idea.stage.value:23}  {idea.category.value:14}  {idea.title}"
        )
    return "\n".join(lines)


# -- scoring ----------------------------------------------------------------


def civps_text(response: CivpsResponse) -> str:
    lines = [f"CIVPS for idea {response.idea_id}"]
    for name in SCORE_DIMENSIONS:
        lines.append(f"  {name:24} {score(response.result.per_dimension_mean[name]):>8}")
    lines.append(
        f"  {'overall':24} {score(response.result.overall):>8}"
        f"  (scorers: {response.result.scorer_count})"
    )
    lines.append(
        f"gate: {response.gate.decision.value}"
        f" (threshold {score(response.gate.threshold_used)})"
    )
    return "\n".join(lines)


# -- simulation ---------------------------------------------------------------


def simulate_text(response: SimulateResponse, currency: str) -> str:
    config = response.config
    lines = [
        f"Simulation ({response.semantics.value}, n={response.n}, seed={response.seed})",
        f"  c_incident   {money(config.c_incident):>18} {currency}",
        f"  p_incident   {ratio(config.p_incident):>18}",
        f"  c_investment {money(config.c_investment):>18} {currency}",
        f"  r_investment {ratio(config.r_investment):>18}",
        f"  mean_bv      {money(response.mean_bv):>18} {currency}",
        f"  expected_bv  {money(response.expected_bv):>18} {currency}",
        f"  std_dev      {money(response.std_dev):>18} {currency}",
    ]
    for level in PERCENTILE_LEVELS:
        lines.append(
            f"  p{level:<12} {money(response.percentiles[level]):>18} {currency}"
        )
    lines.append(f"  prevented    {response.prevented_count} / {response.n}")
    lines.append("  distribution is two-point: savings take exactly two values")
    return "\n".join(lines)


def sweep_csv(entries: Iterable[SweepEntry]) -> str:
    header = [
        "index",
        "c_incident",
        "p_incident",
        "c_investment",
        "r_investment",
        "n",
        "semantics",
        "seed",
        "mean_bv",
        "std_dev",
        *[f"p{level}" for level in PERCENTILE_LEVELS],
        "prevented_count",
        "expected_bv",
    ]
    rows: list[list[object]] = [header]
    for entry in entries:
        config, result = entry.config, entry.result
        rows.append(
            [
                entry.index,
                money(config.c_incident),
                ratio(config.p_incident),
                money(config.c_investment),
                ratio(config.r_investment),
                config.n,
                config.semantics.value,
                config.seed,
                money(result.mean_bv),
                money(result.std_dev),
                *[money(result.percentiles[level]) for level in PERCENTILE_LEVELS],
                result.prevented_count,
                money(entry.expected_bv),
            ]
        )
    return _csv_text(rows)


# -- quadrants ----------------------------------------------------------------


def quadrant_text(decision: QuadrantDecision) -> str:
    return f"{decision.quadrant.value}\n{decision.rationale}"


def quadrants_table(points: Iterable[QuadrantPoint]) -> str:
    lines = [f"{'idea_id':32}  {'effort':>6}  {'impact':>6}  {'quadrant':15}  title"]
    for point in points:
        lines.append(
            f"{point.idea_id:32}  {point.effort:>6}  {point.impact:>6}"
            f"  {point.decision.quadrant.value:15}  {point.title}"
        )
    return "\n".join(lines)


def quadrants_csv(points: Iterable[QuadrantPoint]) -> str:
    rows: list[list[object]] = [["idea_id", "title", "effort", "impact", "quadrant"]]
    for point in points:
        rows.append(
            [point.idea_id, point.title, point.effort, point.impact, point.decision.quadrant.value]
        )
    return _csv_text(rows)


# -- allocation ---------------------------------------------------------------


def _allocation_section(title: str, report: PortfolioReport) -> list[str]:
    lines = [title]
    if report.empty:
        lines.append("  (empty)")
        return lines
    lines.append(f"  {'category':16} {'count':>5} {'fraction':>9} {'target':>7} {'deviation':>10}")
    for category, count in report.counts.items():
        lines.append(
            f"  {category.value:16} {count:>5}"
            f" {fraction(report.fractions[category]):>9}"
            f" {fraction(report.target.fractions[category]):>7}"
            f" {report.deviations[category]:>+10.4f}"
        )
    lines.append(f"  {'total':16} {report.total_ideas:>5}")
    return lines


def allocation_text(response: AllocationResponse) -> str:
    lines = _allocation_section("Allocation (live ideas)", response.live)
    lines += _allocation_section(
        "Allocation (executed: in_execution + value_realized)", response.executed
    )
    return "\n".join(lines)


def allocation_csv(response: AllocationResponse) -> str:
    rows: list[list[object]] = [
        ["slice", "category", "count", "fraction", "target", "deviation"]
    ]
    for label, report in (("live", response.live), ("executed", response.executed)):
        for category, count in report.counts.items():
            rows.append(
                [
                    label,
                    category.value,
                    count,
                    fraction(report.fractions[category]),
                    fraction(report.target.fractions[category]),
                    f"{report.deviations[category]:+.4f}",
                ]
            )
    return _csv_text(rows)


# -- composite report -----------------------------------------------------------


def report_markdown(report: CompositeValueReport, currency: str) -> str:
    lines = [f"# Value report for idea {report.idea_id}", ""]

    lines.append("## CIVPS")
    if report.civps is None:
        lines.append("not evaluated")
    else:
        lines.append("| dimension | mean |")
        lines.append("| --- | ---: |")
        for name in SCORE_DIMENSIONS:
            lines.append(f"| {name} | {score(report.civps.per_dimension_mean[name])} |")
        lines.append(f"| overall | {score(report.civps.overall)} |")
        lines.append(f"\nScorers: {report.civps.scorer_count}")
    lines.append("")

    lines.append("## Risk reduction value")
    lines.append("not evaluated" if report.rrv is None else f"{money(report.rrv)} {currency}")
    lines.append("")
    lines.append("## Operational efficiency value")
    lines.append("not evaluated" if report.oev is None else ratio(report.oev))
    lines.append("")
    lines.append("## Cost-benefit value")
    lines.append("not evaluated" if report.cbv is None else ratio(report.cbv))
    lines.append("")

    lines.append("## Simulated business value")
    if report.mc is None:
        lines.append("not evaluated")
    else:
        mc = report.mc
        lines.append("| statistic | value |")
        lines.append("| --- | ---: |")
        lines.append(f"| mean_bv | {money(mc.mean_bv)} {currency} |")
        lines.append(f"| std_dev | {money(mc.std_dev)} {currency} |")
        for level in PERCENTILE_LEVELS:
            lines.append(f"| p{level} | {money(mc.percentiles[level])} {currency} |")
        lines.append(f"| prevented | {mc.prevented_count} / {mc.n} |")
        lines.append(f"| semantics | {mc.semantics.value} |")
        lines.append(f"| seed | {mc.seed} |")

    if report.warnings:
        lines.append("")
        lines.append("## Warnings")
        for warning in report.warnings:
            lines.append(f"- {warning}")
    return "\n".join(lines) + "\n"


def report_csv(report: CompositeValueReport, currency: str) -> str:
    rows: list[list[object]] = [["section", "metric", "value", "unit"]]
    if report.civps is not None:
        for name in SCORE_DIMENSIONS:
            rows.append(["civps", name, score(report.civps.per_dimension_mean[name]), "score"])
        rows.append(["civps", "overall", score(report.civps.overall), "score"])
        rows.append(["civps", "scorer_count", report.civps.scorer_count, "count"])
    if report.rrv is not None:
        rows.append(["rrv", "value", money(report.rrv), currency])
    if report.oev is not None:
        rows.append(["oev", "value", ratio(report.oev), "ratio"])
    if report.cbv is not None:
        rows.append(["cbv", "value", ratio(report.cbv), "ratio"])
    if report.mc is not None:
        mc = report.mc
        rows.append(["mc", "mean_bv", money(mc.mean_bv), currency])
        rows.append(["mc", "std_dev", money(mc.std_dev), currency])
        for level in PERCENTILE_LEVELS:
            rows.append(["mc", f"p{level}", money(mc.percentiles[level]), currency])
        rows.append(["mc", "prevented_count", mc.prevented_count, "count"])
        rows.append(["mc", "n", mc.n, "count"])
        rows.append(["mc", "semantics", mc.semantics.value, ""])
        rows.append(["mc", "seed", mc.seed, ""])
    for section in report.not_evaluated:
        rows.append([section, "status", "not evaluated", ""])
    for warning in report.warnings:
        rows.append(["warning", "message", warning, ""])
    return _csv_text(rows)
