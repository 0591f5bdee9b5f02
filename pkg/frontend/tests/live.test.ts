// Full-stack round trip: the real panels driving a live service instance.
// Skipped unless LIVE_API_BASE points at a running `foresight serve`
// (started on a scratch portfolio; these tests mutate it).

import { afterEach, describe, expect, it } from "vitest";

import { api, setApiBase } from "../src/api";
import { QuadrantBoard } from "../src/components/board";
import { ScoringPanel } from "../src/components/scoring";
import { WhatIfPanel } from "../src/components/whatif";
import { mount } from "./helpers";

const BASE = process.env.LIVE_API_BASE;

describe.skipIf(!BASE)("live service round trip", () => {
  afterEach(() => {
    document.body.innerHTML = "";
  });

  it("runs the scoring, what-if, and board flows against the real API", async () => {
    setApiBase(BASE!);

    // -- seed three ideas through the public API only
    const draft = await api.createIdea({
      title: "Live draft idea",
      category: "incremental",
      originator: "live-test",
    });
    const scoredIdea = await api.createIdea({
      title: "Live scored idea",
      category: "sustaining",
      originator: "live-test",
    });
    const roadmapped = await api.createIdea({
      title: "Live roadmapped idea",
      category: "disruptive",
      originator: "live-test",
    });
    await api.advance(scoredIdea.id, { kind: "categorize", actor: "live-test" });
    await api.advance(roadmapped.id, { kind: "categorize", actor: "live-test" });

    // -- scoring form: submit an all-10 scorecard, panel must show 10.0
    const scoringRoot = mount();
    const scoring = new ScoringPanel(scoringRoot, api, scoredIdea.id);
    await scoring.init();
    scoringRoot.querySelector<HTMLInputElement>("[name=scorer_id]")!.value =
      "live-member";
    for (const input of scoringRoot.querySelectorAll<HTMLInputElement>(
      ".dimension-input input",
    )) {
      input.value = "10";
    }
    await scoring.submit();
    expect(
      scoringRoot.querySelector<HTMLElement>(".civps-overall")!.dataset.value,
    ).toBe("10");
    expect(scoringRoot.querySelector(".civps-overall")!.textContent).toBe("10.0000");

    // -- what-if with r_investment = 1 must display -c_investment
    const whatifRoot = mount();
    const whatif = new WhatIfPanel(whatifRoot, api);
    whatif.init();
    whatifRoot.querySelector<HTMLInputElement>("[name=r_investment]")!.value = "1";
    whatifRoot.querySelector<HTMLInputElement>("[name=c_investment]")!.value =
      "100000";
    await whatif.run();
    expect(whatifRoot.querySelector<HTMLElement>(".sim-mean")!.dataset.value).toBe(
      "-100000",
    );
    expect(whatifRoot.querySelector(".sim-mean")!.textContent).toBe("-100,000.00");

    // -- drive the third idea to roadmapped through the real funnel
    await api.addScorecard(roadmapped.id, {
      scorer_id: "live-member",
      revenue: 9,
      cost_efficiency: 9,
      operational_efficiency: 9,
      risk_mitigation: 9,
      trust_building: 9,
      strategic_alignment: 9,
    });
    await api.advance(roadmapped.id, { kind: "gate_pass", actor: "live-test" });
    await api.advance(roadmapped.id, {
      kind: "roadmap",
      actor: "live-test",
      estimate: { effort: 2, impact: 8, effort_notes: "", impact_notes: "" },
    });

    // -- board offers exactly the legal transitions per idea
    const boardRoot = mount();
    const board = new QuadrantBoard(boardRoot, api, "live-test");
    await board.init();

    const offered = () =>
      [...boardRoot.querySelectorAll<HTMLElement>(".event-button")].map(
        (node) => node.dataset.kind,
      );
    await board.select(draft.id);
    expect(offered()).toEqual(["categorize", "reject"]);
    await board.select(scoredIdea.id);
    expect(offered()).toEqual(["submit_scores", "gate_pass", "gate_return", "reject"]);
    await board.select(roadmapped.id);
    expect(offered()).toEqual(["approve_execution", "reject"]);

    // conditional-go recommendation computed server-side for (2, 8) at CIVPS 9
    expect(
      boardRoot.querySelector<HTMLElement>(".panel-recommendation")!.dataset.proceed,
    ).toBe("conditional");
  }, 30_000);
});
