// Scoring form plus the CIVPS panel it refreshes. Dimension means, the
// overall score, and the gate decision are rendered exactly as the server
// reports them.

import { ApiRequestError, type Api } from "../api";
import { score, valueSpan } from "../format";
import { SCORE_DIMENSIONS, type ScoreDimension } from "../types";

const LABELS: Record<ScoreDimension, string> = {
  revenue: "Revenue",
  cost_efficiency: "Cost efficiency",
  operational_efficiency: "Operational efficiency",
  risk_mitigation: "Risk mitigation",
  trust_building: "Trust building",
  strategic_alignment: "Strategic alignment",
};

export class ScoringPanel {
  constructor(
    private readonly root: HTMLElement,
    private readonly client: Api,
    private ideaId: string,
  ) {}

  setIdea(ideaId: string): Promise<void> {
    this.ideaId = ideaId;
    return this.init();
  }

  async init(): Promise<void> {
    this.root.innerHTML = `
      <form class="scoring-form">
        <label>Scorer
          <input name="scorer_id" required placeholder="member id" />
        </label>
        ${SCORE_DIMENSIONS.map(
          (dim) => `
        <label class="dimension-input" data-dim="${dim}">${LABELS[dim]}
          <input name="${dim}" type="number" min="1" max="10" step="1" value="5" />
          <span class="inline-error" data-dim="${dim}"></span>
        </label>`,
        ).join("")}
        <button type="submit" class="submit-scorecard">Submit scorecard</button>
        <span class="form-error"></span>
      </form>
      <div class="civps-panel"></div>
    `;
    const form = this.root.querySelector<HTMLFormElement>(".scoring-form")!;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
    await this.refreshCivps();
  }

  private readInputs(): Record<string, number | string> | null {
    const form = this.root.querySelector<HTMLFormElement>(".scoring-form")!;
    for (const errorNode of form.querySelectorAll(".inline-error")) {
      errorNode.textContent = "";
    }
    form.querySelector(".form-error")!.textContent = "";

    const scorer = form.querySelector<HTMLInputElement>("[name=scorer_id]")!.value.trim();
    if (!scorer) {
      form.querySelector(".form-error")!.textContent = "scorer id is required";
      return null;
    }
    const body: Record<string, number | string> = { scorer_id: scorer };
    let valid = true;
    for (const dim of SCORE_DIMENSIONS) {
      const raw = form.querySelector<HTMLInputElement>(`[name=${dim}]`)!.value;
      const value = Number(raw);
      if (!Number.isInteger(value) || value < 1 || value > 10) {
        form.querySelector(`.inline-error[data-dim=${dim}]`)!.textContent =
          "must be an integer from 1 to 10";
        valid = false;
      } else {
        body[dim] = value;
      }
    }
    return valid ? body : null;
  }

  async submit(): Promise<void> {
    const body = this.readInputs();
    if (body === null) {
      return; // constraint violated: no request is sent
    }
    try {
      await this.client.addScorecard(this.ideaId, body as never);
    } catch (error) {
      this.showError(error);
      return;
    }
    await this.refreshCivps();
  }

  private showError(error: unknown): void {
    const form = this.root.querySelector<HTMLFormElement>(".scoring-form")!;
    if (error instanceof ApiRequestError) {
      const dim = SCORE_DIMENSIONS.find((d) => error.path?.includes(d));
      const target = dim
        ? form.querySelector(`.inline-error[data-dim=${dim}]`)!
        : form.querySelector(".form-error")!;
      target.textContent = `${error.code}: ${error.message}`;
    } else {
      form.querySelector(".form-error")!.textContent = String(error);
    }
  }

  async refreshCivps(): Promise<void> {
    const panel = this.root.querySelector<HTMLElement>(".civps-panel")!;
    let response;
    try {
      response = await this.client.getCivps(this.ideaId);
    } catch (error) {
      if (error instanceof ApiRequestError && error.code === "VALIDATION") {
        panel.innerHTML = `<p class="civps-missing">No scorecards yet.</p>`;
        return;
      }
      panel.innerHTML = `<p class="civps-missing">${String(error)}</p>`;
      return;
    }
    const { result, gate } = response;
    const rows = SCORE_DIMENSIONS.map((dim) => {
      const mean = result.per_dimension_mean[dim];
      return `
        <div class="dimension-row" data-dim="${dim}">
          <span class="dimension-label">${LABELS[dim]}</span>
          <span class="dimension-bar" style="width:${mean * 10}%"></span>
          ${valueSpan(mean, score(mean), `civps-dimension`)}
        </div>`;
    }).join("");
    panel.innerHTML = `
      <h3>CIVPS</h3>
      <div class="dimension-chart">${rows}</div>
      <p>
        Overall ${valueSpan(result.overall, score(result.overall), "civps-overall")}
        from ${valueSpan(result.scorer_count, String(result.scorer_count), "civps-scorers")}
        scorer(s)
      </p>
      <p class="civps-gate" data-decision="${gate.decision}">
        Gate: ${gate.decision === "pass" ? "pass" : "return for refinement"}
        (threshold ${valueSpan(gate.threshold_used, score(gate.threshold_used), "civps-threshold")})
      </p>
    `;
  }
}
