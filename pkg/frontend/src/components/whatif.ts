// What-if simulation panel: runs ad-hoc simulations, renders the result,
// and can attach the chosen config to an idea. All statistics (mean, band,
// bar counts, the oracle reference) are server-computed; this code only
// scales bar geometry.

import { ApiRequestError, type Api } from "../api";
import { money, ratio, valueSpan } from "../format";
import type { SimulateRequest, SimulateResponse } from "../types";

const PERCENTILE_ORDER = ["5", "25", "50", "75", "95"];

export class WhatIfPanel {
  private last: { request: SimulateRequest; response: SimulateResponse } | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Api,
  ) {}

  init(): void {
    this.root.innerHTML = `
      <form class="whatif-form">
        <label>Incident cost <input name="c_incident" type="number" min="0" value="1000000" /></label>
        <label>Incident probability <input name="p_incident" type="number" min="0" max="1" step="0.01" value="0.3" /></label>
        <label>Investment cost <input name="c_investment" type="number" min="0" value="100000" /></label>
        <label>Probability reduction <input name="r_investment" type="number" min="0" max="1" step="0.01" value="0.5" /></label>
        <label>Iterations <input name="n" type="number" min="1" value="100000" /></label>
        <label>Seed <input name="seed" type="number" min="0" value="42" /></label>
        <label>Comparison rule
          <select name="semantics">
            <option value="residual_incident">residual_incident</option>
            <option value="prevented_event">prevented_event</option>
          </select>
        </label>
        <label class="oracle-toggle-label">
          <input type="checkbox" class="oracle-toggle" /> show closed-form reference
        </label>
        <button type="submit" class="run-simulation">Run</button>
        <span class="whatif-error"></span>
      </form>
      <div class="whatif-result"></div>
      <div class="whatif-attach"></div>
    `;
    this.root
      .querySelector<HTMLFormElement>(".whatif-form")!
      .addEventListener("submit", (event) => {
        event.preventDefault();
        void this.run();
      });
    this.root
      .querySelector<HTMLInputElement>(".oracle-toggle")!
      .addEventListener("change", () => this.renderResult());
  }

  readRequest(): SimulateRequest {
    const form = this.root.querySelector<HTMLFormElement>(".whatif-form")!;
    const num = (name: string) =>
      Number(form.querySelector<HTMLInputElement>(`[name=${name}]`)!.value);
    return {
      c_incident: num("c_incident"),
      p_incident: num("p_incident"),
      c_investment: num("c_investment"),
      r_investment: num("r_investment"),
      n: num("n"),
      seed: num("seed"),
      semantics: form.querySelector<HTMLSelectElement>("[name=semantics]")!
        .value as SimulateRequest["semantics"],
    };
  }

  async run(): Promise<void> {
    const errorNode = this.root.querySelector<HTMLElement>(".whatif-error")!;
    errorNode.textContent = "";
    const request = this.readRequest();
    try {
      const response = await this.client.simulate(request);
      this.last = { request, response };
      this.renderResult();
    } catch (error) {
      if (error instanceof ApiRequestError) {
        errorNode.textContent = `${error.code}: ${error.message}`;
      } else {
        errorNode.textContent = String(error);
      }
    }
  }

  async attachToIdea(ideaId: string): Promise<void> {
    if (!this.last) {
      return;
    }
    const attachNode = this.root.querySelector<HTMLElement>(".whatif-attach")!;
    try {
      await this.client.simulateIdea(ideaId, this.last.request);
      attachNode.textContent = `Attached this configuration to ${ideaId}.`;
    } catch (error) {
      attachNode.textContent =
        error instanceof ApiRequestError
          ? `${error.code}: ${error.message}`
          : String(error);
    }
  }

  renderResult(): void {
    const container = this.root.querySelector<HTMLElement>(".whatif-result")!;
    if (!this.last) {
      container.innerHTML = "";
      return;
    }
    const { response } = this.last;
    const showOracle =
      this.root.querySelector<HTMLInputElement>(".oracle-toggle")!.checked;

    const bandValues = PERCENTILE_ORDER.map((level) => {
      const value = response.percentiles[level];
      return `<span class="percentile" data-level="${level}">p${level} ${valueSpan(
        value,
        money(value),
      )}</span>`;
    }).join(" ");

    const total = response.histogram.reduce((sum, bin) => sum + bin.count, 0);
    const bars = response.histogram
      .map((bin, index) => {
        const height = total === 0 ? 0 : Math.round((bin.count / total) * 100);
        return `
          <div class="outcome-bar" data-index="${index}">
            <div class="outcome-bar-fill" style="height:${height}%"></div>
            <span class="outcome-count" data-value="${bin.count}">${bin.count}</span>
            <span class="outcome-savings" data-value="${bin.savings}">${money(bin.savings)}</span>
          </div>`;
      })
      .join("");

    container.innerHTML = `
      <h3>Result <span class="semantics-label">${response.semantics}</span></h3>
      <p>Mean business value: ${valueSpan(response.mean_bv, money(response.mean_bv), "sim-mean")}</p>
      ${
        showOracle
          ? `<p class="oracle-line">Closed-form expectation: ${valueSpan(
              response.expected_bv,
              money(response.expected_bv),
              "sim-expected",
            )}</p>`
          : ""
      }
      <p>Std dev: ${valueSpan(response.std_dev, money(response.std_dev), "sim-std")}</p>
      <p class="percentile-band">${bandValues}</p>
      <div class="outcome-chart">${bars}</div>
      <p class="sim-meta">
        prevented ${valueSpan(response.prevented_count, String(response.prevented_count), "sim-prevented")}
        of ${valueSpan(response.n, String(response.n), "sim-n")} iterations,
        seed <span class="sim-seed" data-value="${response.seed}">${response.seed}</span>,
        p_incident ${valueSpan(response.config.p_incident, ratio(response.config.p_incident))}
      </p>
      <p class="two-point-note">Savings take exactly two values; the chart shows their counts.</p>
    `;
  }
}
