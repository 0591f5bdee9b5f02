import { afterEach, describe, expect, it, vi } from "vitest";

import { api } from "../src/api";
import { QuadrantBoard } from "../src/components/board";
import {
  ideaCategorizedScored,
  ideaDraft,
  ideaList,
  ideaRoadmapped,
  quadrants,
} from "./fixtures";
import { MockServer, mount } from "./helpers";

afterEach(() => {
  vi.unstubAllGlobals();
  document.body.innerHTML = "";
});

function threeIdeaServer(): MockServer {
  return new MockServer()
    .on("GET", "/portfolio/quadrants", quadrants)
    .on("GET", "/ideas", ideaList)
    .on("GET", `/ideas/${ideaDraft.id}`, ideaDraft)
    .on("GET", `/ideas/${ideaCategorizedScored.id}`, ideaCategorizedScored)
    .on("GET", `/ideas/${ideaRoadmapped.id}`, ideaRoadmapped);
}

function offeredKinds(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>(".event-button")].map(
    (node) => node.dataset.kind!,
  );
}

describe("quadrant board", () => {
  it("plots every estimated idea in its server-assigned quadrant", async () => {
    const server = threeIdeaServer();
    server.install();

    const root = mount();
    await new QuadrantBoard(root, api).init();

    const points = root.querySelectorAll(".board-point");
    expect(points).toHaveLength(quadrants.points.length);
    const corner = root.querySelector<HTMLElement>(
      `.board-point[data-idea=idea-001]`,
    )!;
    expect(corner.classList.contains("quadrant-quick_win")).toBe(true);
    expect(corner.dataset.effort).toBe("2");
  });

  it("offers exactly the legal transitions for each of the three fixtures", async () => {
    const server = threeIdeaServer();
    server.install();

    const root = mount();
    const board = new QuadrantBoard(root, api);
    await board.init();

    const expectations: Array<[string, string[]]> = [
      [ideaDraft.id, [...ideaDraft.legal_events]],
      [ideaCategorizedScored.id, [...ideaCategorizedScored.legal_events]],
      [ideaRoadmapped.id, [...ideaRoadmapped.legal_events]],
    ];
    for (const [ideaId, legal] of expectations) {
      await board.select(ideaId);
      const offered = offeredKinds(root);
      expect(offered).toEqual(legal);
      expect(offered.length).toBeLessThan(9); // never the full event alphabet
    }
  });

  it("shows the server recommendation for a roadmapped idea", async () => {
    const server = threeIdeaServer();
    server.install();

    const root = mount();
    const board = new QuadrantBoard(root, api);
    await board.init();
    await board.select(ideaRoadmapped.id);

    const recommendation = root.querySelector<HTMLElement>(".panel-recommendation")!;
    expect(recommendation.dataset.proceed).toBe(
      ideaRoadmapped.recommendation!.proceed,
    );
    const conditions = [
      ...root.querySelectorAll(".panel-conditions li"),
    ].map((node) => node.textContent);
    expect(conditions).toEqual([...ideaRoadmapped.recommendation!.conditions]);
  });

  it("applies a legal event and re-renders from fresh server state", async () => {
    const server = threeIdeaServer().on(
      "POST",
      `/ideas/${ideaDraft.id}/advance`,
      {
        idea: { ...ideaDraft, stage: "categorized" },
        event: { kind: "categorize", actor: "forum-ui", at: "2026-01-01T12:00:00Z" },
      },
    );
    server.install();

    const root = mount();
    const board = new QuadrantBoard(root, api);
    await board.init();
    await board.select(ideaDraft.id);
    await board.fire({ kind: "categorize", actor: "forum-ui" });

    const [request] = server.sent("POST", `/ideas/${ideaDraft.id}/advance`);
    expect(request.body).toMatchObject({ kind: "categorize", actor: "forum-ui" });
    expect(root.querySelector(".board-notice")!.textContent).toBe("");
  });

  it("renders a refresh notice when a race produces a 409", async () => {
    const server = threeIdeaServer().on(
      "POST",
      `/ideas/${ideaDraft.id}/advance`,
      {
        status: 409,
        code: "ILLEGAL_TRANSITION",
        message: "event 'categorize' is illegal in stage 'categorized'",
        path: null,
      },
      409,
    );
    server.install();

    const root = mount();
    const board = new QuadrantBoard(root, api);
    await board.init();
    await board.select(ideaDraft.id);
    await board.fire({ kind: "categorize", actor: "forum-ui" });

    expect(root.querySelector(".board-notice")!.textContent).toBe(
      "state changed, refresh",
    );
  });

  it("collects the roadmap estimate before firing the roadmap event", async () => {
    const scored = { ...ideaCategorizedScored, stage: "scored", legal_events: ["roadmap", "reject"] };
    const server = new MockServer()
      .on("GET", "/portfolio/quadrants", quadrants)
      .on("GET", "/ideas", ideaList)
      .on("GET", `/ideas/${scored.id}`, scored)
      .on("POST", `/ideas/${scored.id}/advance`, {
        idea: { ...scored, stage: "roadmapped" },
        event: { kind: "roadmap", actor: "forum-ui", at: "2026-01-01T12:00:00Z" },
      });
    server.install();

    const root = mount();
    const board = new QuadrantBoard(root, api);
    await board.init();
    await board.select(scored.id);

    root.querySelector<HTMLElement>(".event-button[data-kind=roadmap]")!.click();
    const form = root.querySelector<HTMLFormElement>(".roadmap-form")!;
    expect(form.hidden).toBe(false);
    form.querySelector<HTMLInputElement>("[name=effort]")!.value = "2";
    form.querySelector<HTMLInputElement>("[name=impact]")!.value = "8";
    form.dispatchEvent(new Event("submit", { cancelable: true }));
    await vi.waitFor(() => {
      expect(server.sent("POST", `/ideas/${scored.id}/advance`)).toHaveLength(1);
      // the follow-up refresh (quadrants + list + re-select) must finish
      // before teardown so no request escapes the mock
      expect(server.sent("GET", `/ideas/${scored.id}`).length).toBeGreaterThanOrEqual(2);
    });
    const [request] = server.sent("POST", `/ideas/${scored.id}/advance`);
    expect(request.body).toMatchObject({
      kind: "roadmap",
      estimate: { effort: 2, impact: 8 },
    });
  });
});
