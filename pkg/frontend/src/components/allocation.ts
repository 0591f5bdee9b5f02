// Allocation donut: the live category mix inside a thin target ring, plus
// the numbers behind both slices. Fractions, counts, and deviations are
// taken from the API; only arc geometry is computed here.

import type { Api } from "../api";
import { fraction, signedFraction, valueSpan } from "../format";
import type { InnovationCategory, PortfolioReport } from "../types";

const CATEGORIES: InnovationCategory[] = [
  "sustaining",
  "incremental",
  "disruptive",
  "transformative",
];

const TAU = Math.PI * 2;

function arcPath(
  cx: number,
  cy: number,
  radius: number,
  start: number,
  sweep: number,
): string {
  // Degenerate sweeps (0 or full circle) would collapse the path.
  if (sweep <= 0) {
    return "";
  }
  if (sweep >= TAU - 1e-9) {
    sweep = TAU - 1e-4;
  }
  const x0 = cx + radius * Math.cos(start);
  const y0 = cy + radius * Math.sin(start);
  const x1 = cx + radius * Math.cos(start + sweep);
  const y1 = cy + radius * Math.sin(start + sweep);
  const large = sweep > Math.PI ? 1 : 0;
  return `M ${x0} ${y0} A ${radius} ${radius} 0 ${large} 1 ${x1} ${y1}`;
}

function ring(fractions: Record<InnovationCategory, number>, radius: number, cssPrefix: string): string {
  let angle = -Math.PI / 2;
  const parts: string[] = [];
  for (const category of CATEGORIES) {
    const sweep = fractions[category] * TAU;
    const path = arcPath(80, 80, radius, angle, sweep);
    if (path) {
      parts.push(
        `<path class="${cssPrefix}-${category}" data-category="${category}" d="${path}" />`,
      );
    }
    angle += sweep;
  }
  return parts.join("");
}

export class AllocationPanel {
  constructor(
    private readonly root: HTMLElement,
    private readonly client: Api,
  ) {}

  async init(): Promise<void> {
    const response = await this.client.getAllocation();
    const live = response.live;
    const donut = live.empty
      ? `<p class="alloc-empty">Portfolio is empty.</p>`
      : `
        <svg viewBox="0 0 160 160" class="alloc-donut" role="img">
          ${ring(live.fractions, 52, "slice")}
          ${ring(live.target.fractions, 70, "target")}
        </svg>`;
    this.root.innerHTML = `
      <h3>Portfolio allocation</h3>
      ${donut}
      <table class="alloc-table">
        <thead>
          <tr><th>category</th><th>count</th><th>fraction</th><th>target</th><th>deviation</th></tr>
        </thead>
        <tbody>
          ${this.rows(live)}
        </tbody>
      </table>
      <h4>Executed slice</h4>
      ${
        response.executed.empty
          ? `<p class="alloc-executed-empty">Nothing in execution yet.</p>`
          : `<table class="alloc-table alloc-executed"><tbody>${this.rows(response.executed)}</tbody></table>`
      }
    `;
  }

  private rows(report: PortfolioReport): string {
    return CATEGORIES.map(
      (category) => `
      <tr class="alloc-row" data-category="${category}">
        <td>${category}</td>
        <td>${valueSpan(report.counts[category], String(report.counts[category]), "alloc-count")}</td>
        <td>${valueSpan(report.fractions[category], fraction(report.fractions[category]), "alloc-fraction")}</td>
        <td>${valueSpan(report.target.fractions[category], fraction(report.target.fractions[category]), "alloc-target")}</td>
        <td>${valueSpan(report.deviations[category], signedFraction(report.deviations[category]), "alloc-deviation")}</td>
      </tr>`,
    ).join("");
  }
}
