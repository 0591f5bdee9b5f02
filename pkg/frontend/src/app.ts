// Page layout and wiring: idea list and creation on the left, the active
// idea's scoring panel and the portfolio views on the right.

import { api, ApiRequestError, type Api } from "./api";
import { AllocationPanel } from "./components/allocation";
import { QuadrantBoard } from "./components/board";
import { ScoringPanel } from "./components/scoring";
import { WhatIfPanel } from "./components/whatif";
import type { InnovationCategory } from "./types";

export class App {
  private scoring: ScoringPanel | null = null;
  private board!: QuadrantBoard;
  private whatif!: WhatIfPanel;
  private allocation!: AllocationPanel;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Api = api,
  ) {}

  async init(): Promise<void> {
    this.root.innerHTML = `
      <header>
        <h1>Innovation forum</h1>
        <p>Score ideas, explore value under uncertainty, and keep the portfolio balanced.</p>
      </header>
      <main>
        <section class="pane pane-ideas">
          <h2>Ideas</h2>
          <form class="create-form">
            <input name="title" placeholder="Idea title" required />
            <select name="category">
              <option value="sustaining">sustaining</option>
              <option value="incremental">incremental</option>
              <option value="disruptive">disruptive</option>
              <option value="transformative">transformative</option>
            </select>
            <input name="originator" placeholder="originator" required />
            <button type="submit">Add idea</button>
            <span class="create-error"></span>
          </form>
          <ul class="idea-list"></ul>
        </section>
        <section class="pane pane-scoring">
          <h2>Scoring</h2>
          <p class="scoring-hint">Select an idea to score it.</p>
          <div class="scoring-root"></div>
        </section>
        <section class="pane pane-board">
          <h2>Road map</h2>
          <div class="board-root"></div>
        </section>
        <section class="pane pane-whatif">
          <h2>What-if simulation</h2>
          <div class="whatif-root"></div>
        </section>
        <section class="pane pane-allocation">
          <div class="allocation-root"></div>
        </section>
      </main>
    `;
    this.whatif = new WhatIfPanel(
      this.root.querySelector<HTMLElement>(".whatif-root")!,
      this.client,
    );
    this.whatif.init();
    this.board = new QuadrantBoard(
      this.root.querySelector<HTMLElement>(".board-root")!,
      this.client,
    );
    this.allocation = new AllocationPanel(
      this.root.querySelector<HTMLElement>(".allocation-root")!,
      this.client,
    );
    this.root
      .querySelector<HTMLFormElement>(".create-form")!
      .addEventListener("submit", (event) => {
        event.preventDefault();
        void this.createIdea();
      });
    await Promise.all([
      this.refreshIdeas(),
      this.board.init(),
      this.allocation.init(),
    ]);
  }

  private async createIdea(): Promise<void> {
    const form = this.root.querySelector<HTMLFormElement>(".create-form")!;
    const errorNode = form.querySelector<HTMLElement>(".create-error")!;
    errorNode.textContent = "";
    const title = form.querySelector<HTMLInputElement>("[name=title]")!.value;
    const originator = form.querySelector<HTMLInputElement>("[name=originator]")!.value;
    const category = form.querySelector<HTMLSelectElement>("[name=category]")!
      .value as InnovationCategory;
    try {
      await this.client.createIdea({ title, category, originator });
    } catch (error) {
      errorNode.textContent =
        error instanceof ApiRequestError ? error.message : String(error);
      return;
    }
    form.reset();
    await Promise.all([this.refreshIdeas(), this.allocation.init()]);
  }

  private async refreshIdeas(): Promise<void> {
    const listing = await this.client.listIdeas();
    const list = this.root.querySelector<HTMLElement>(".idea-list")!;
    list.innerHTML = listing.ideas
      .map(
        (idea) => `
        <li>
          <button class="select-idea" data-idea="${idea.id}">
            ${idea.title} <em>(${idea.category}, ${idea.stage})</em>
          </button>
        </li>`,
      )
      .join("");
    for (const button of list.querySelectorAll<HTMLButtonElement>(".select-idea")) {
      button.addEventListener("click", () => {
        void this.selectIdea(button.dataset.idea!);
      });
    }
  }

  async selectIdea(ideaId: string): Promise<void> {
    this.root.querySelector<HTMLElement>(".scoring-hint")!.hidden = true;
    const mount = this.root.querySelector<HTMLElement>(".scoring-root")!;
    if (!this.scoring) {
      this.scoring = new ScoringPanel(mount, this.client, ideaId);
      await this.scoring.init();
    } else {
      await this.scoring.setIdea(ideaId);
    }
    await this.board.select(ideaId);
  }
}
