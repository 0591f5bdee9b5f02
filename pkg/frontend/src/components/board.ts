// Quadrant board: effort/impact scatter plus a per-idea panel that offers
// exactly the transitions the server says are legal. Quadrant assignments
// come from the server with each point; this code only places dots.

import { ApiRequestError, type Api } from "../api";
import type { AdvanceRequest, EventKind, IdeaDetail } from "../types";

const EVENT_LABELS: Record<EventKind, string> = {
  categorize: "Categorize",
  submit_scores: "Submit scores",
  gate_pass: "Gate: pass",
  gate_return: "Gate: return",
  roadmap: "Roadmap",
  approve_execution: "Approve execution",
  declare_value_realized: "Declare value realized",
  resubmit: "Resubmit",
  reject: "Reject",
};

const SIZE = 320;
const PAD = 24;

function position(value: number): number {
  // 1..10 score onto the drawable span.
  return PAD + ((value - 1) / 9) * (SIZE - 2 * PAD);
}

export class QuadrantBoard {
  private selected: IdeaDetail | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Api,
    private readonly actor = "forum-ui",
  ) {}

  async init(): Promise<void> {
    this.root.innerHTML = `
      <div class="board-plot"></div>
      <div class="board-list"></div>
      <div class="board-panel"></div>
      <p class="board-notice"></p>
    `;
    await this.refresh();
  }

  async refresh(): Promise<void> {
    const [quadrants, listing] = await Promise.all([
      this.client.getQuadrants(),
      this.client.listIdeas(),
    ]);

    const mid = (position(5) + position(6)) / 2;
    const dots = quadrants.points
      .map(
        (point) => `
        <circle
          class="board-point quadrant-${point.decision.quadrant}"
          data-idea="${point.idea_id}"
          data-effort="${point.effort}"
          data-impact="${point.impact}"
          cx="${position(point.effort)}"
          cy="${SIZE - position(point.impact)}"
          r="7"
        ><title>${point.title}: ${point.decision.quadrant}</title></circle>`,
      )
      .join("");
    this.root.querySelector(".board-plot")!.innerHTML = `
      <svg viewBox="0 0 ${SIZE} ${SIZE}" class="board-svg" role="img">
        <rect x="${PAD}" y="${PAD}" width="${mid - PAD}" height="${mid - PAD}" class="region-conditional_go" />
        <rect x="${mid}" y="${PAD}" width="${SIZE - PAD - mid}" height="${mid - PAD}" class="region-risky_venture" />
        <rect x="${PAD}" y="${mid}" width="${mid - PAD}" height="${SIZE - PAD - mid}" class="region-quick_win" />
        <rect x="${mid}" y="${mid}" width="${SIZE - PAD - mid}" height="${SIZE - PAD - mid}" class="region-reassess_scope" />
        <text x="${PAD + 4}" y="${SIZE - 6}" class="axis-label">effort →</text>
        <text x="6" y="${PAD - 8}" class="axis-label">impact ↑</text>
        ${dots}
      </svg>`;

    const items = listing.ideas
      .map(
        (idea) => `
        <li>
          <button class="board-idea" data-idea="${idea.id}">
            ${idea.title} <em>(${idea.stage})</em>
          </button>
        </li>`,
      )
      .join("");
    this.root.querySelector(".board-list")!.innerHTML = `<ul>${items}</ul>`;

    for (const node of this.root.querySelectorAll<HTMLElement>("[data-idea]")) {
      node.addEventListener("click", () => {
        void this.select(node.dataset.idea!);
      });
    }
    if (this.selected) {
      await this.select(this.selected.id);
    }
  }

  async select(ideaId: string): Promise<void> {
    this.selected = await this.client.getIdea(ideaId);
    this.renderPanel();
  }

  private renderPanel(): void {
    const panel = this.root.querySelector<HTMLElement>(".board-panel")!;
    const idea = this.selected;
    if (!idea) {
      panel.innerHTML = "";
      return;
    }
    const recommendation = idea.recommendation
      ? `
        <p class="panel-recommendation" data-proceed="${idea.recommendation.proceed}">
          Proceed: <strong>${idea.recommendation.proceed}</strong>
        </p>
        <ul class="panel-conditions">
          ${idea.recommendation.conditions.map((c) => `<li>${c}</li>`).join("")}
        </ul>`
      : `<p class="panel-recommendation">No roadmap estimate yet.</p>`;
    const buttons = idea.legal_events
      .map(
        (kind) =>
          `<button class="event-button" data-kind="${kind}">${EVENT_LABELS[kind]}</button>`,
      )
      .join("");
    panel.innerHTML = `
      <h3>${idea.title}</h3>
      <p class="panel-stage">Stage: ${idea.stage}</p>
      ${idea.decision ? `<p class="panel-quadrant">${idea.decision.quadrant}</p>` : ""}
      ${recommendation}
      <div class="panel-events">${buttons}</div>
      <form class="roadmap-form" hidden>
        <label>Effort <input name="effort" type="number" min="1" max="10" value="5" /></label>
        <label>Impact <input name="impact" type="number" min="1" max="10" value="5" /></label>
        <button type="submit">Confirm roadmap</button>
      </form>
    `;
    for (const button of panel.querySelectorAll<HTMLButtonElement>(".event-button")) {
      button.addEventListener("click", () => {
        const kind = button.dataset.kind as EventKind;
        if (kind === "roadmap") {
          panel.querySelector<HTMLFormElement>(".roadmap-form")!.hidden = false;
        } else {
          void this.fire({ kind, actor: this.actor });
        }
      });
    }
    panel.querySelector<HTMLFormElement>(".roadmap-form")!.addEventListener(
      "submit",
      (event) => {
        event.preventDefault();
        const form = event.currentTarget as HTMLFormElement;
        const effort = Number(form.querySelector<HTMLInputElement>("[name=effort]")!.value);
        const impact = Number(form.querySelector<HTMLInputElement>("[name=impact]")!.value);
        void this.fire({
          kind: "roadmap",
          actor: this.actor,
          estimate: { effort, impact, effort_notes: "", impact_notes: "" },
        });
      },
    );
  }

  async fire(request: AdvanceRequest): Promise<void> {
    const notice = this.root.querySelector<HTMLElement>(".board-notice")!;
    notice.textContent = "";
    if (!this.selected) {
      return;
    }
    try {
      await this.client.advance(this.selected.id, request);
    } catch (error) {
      if (error instanceof ApiRequestError && error.status === 409) {
        notice.textContent = "state changed, refresh";
        return;
      }
      notice.textContent =
        error instanceof ApiRequestError
          ? `${error.code}: ${error.message}`
          : String(error);
      return;
    }
    await this.refresh();
  }
}
