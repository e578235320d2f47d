import { describe, expect, it } from "vitest";

import {
  renderBanner,
  renderCandidates,
  renderChecklist,
  renderIssues,
  renderSentence,
  spanIsDiscontinuous,
  targetViews,
} from "../src/render.js";
import { GOLD_DOC, KO_CANDIDATES } from "./fake_service.js";

describe("token strip", () => {
  it("underlines targets and leaves plain tokens alone", () => {
    const html = renderSentence("s1", GOLD_DOC.sentences[0].tokens, [
      { indices: [1], lemma: "ko", discontinuous: false, recorded: true },
    ]);
    expect(html).toContain('data-sent="s1"');
    expect(html).toMatch(/class="tok target recorded"[^>]*>ko</);
    expect(html).toMatch(/class="tok" data-i="0">mez</);
  });

  it("links the pieces of a discontinuous target with one group id", () => {
    const tokens = GOLD_DOC.sentences[1].tokens;
    const html = renderSentence("s2", tokens, [
      { indices: [1, 3], lemma: "ke_binā", discontinuous: true, recorded: true },
    ]);
    const groups = [...html.matchAll(/data-group="(\d+)"/g)].map((m) => m[1]);
    expect(groups).toEqual(["0", "0"]);
    expect(html).toContain("linked");
    expect((html.match(/class="tok target linked recorded"/g) ?? []).length).toBe(2);
  });

  it("renders a sentence with no targets as plain text", () => {
    const html = renderSentence("s9", ["vah", "gayā"], []);
    expect(html).not.toContain("target");
    expect(html).toContain(">vah<");
  });

  it("escapes markup in tokens", () => {
    const html = renderSentence("s9", ["<b>"], []);
    expect(html).toContain("&lt;b&gt;");
  });
});

describe("target views", () => {
  it("merges records with matcher output, records first", () => {
    const views = targetViews(
      GOLD_DOC.records,
      [
        { indices: [1], lemma: "ko", discontinuous: false },
        { indices: [3], lemma: "kā", discontinuous: false },
      ],
      "s1",
    );
    expect(views.map((v) => [v.indices.join(), v.recorded])).toEqual([
      ["1", true],
      ["3", false],
    ]);
  });

  it("derives discontinuity from the index gap", () => {
    expect(spanIsDiscontinuous([1, 3])).toBe(true);
    expect(spanIsDiscontinuous([1, 2])).toBe(false);
  });
});

describe("candidate panel", () => {
  it("lists candidates in service order with number keys and anchors", () => {
    const html = renderCandidates(KO_CANDIDATES, 0);
    const labels = [...html.matchAll(/<span class="label">([^<]+)<\/span>/g)].map((m) => m[1]);
    expect(labels).toEqual(KO_CANDIDATES.map((c) => c.label));
    expect(html).toContain("<kbd>1</kbd>");
    expect(html).toContain("§dative");
    expect(html.indexOf("preselected")).toBeGreaterThan(-1);
  });

  it("shows an empty notice when nothing is licensed", () => {
    expect(renderCandidates([], null)).toContain("no licensed construals");
  });
});

describe("checklist and notices", () => {
  it("renders prompts and outcome buttons", () => {
    const html = renderChecklist(
      {
        key: "ko",
        title: "ko drop test",
        prompts: ["Can ko be dropped?"],
        outcomes: { droppable: "Theme" },
        anchor: "§accusative",
      },
      "droppable",
    );
    expect(html).toContain("ko drop test");
    expect(html).toContain('data-answer="droppable"');
    expect(html).toContain("outcome active");
    expect(renderChecklist(null, null)).toBe("");
  });

  it("renders issues and read-only banner", () => {
    const html = renderIssues([
      { severity: "error", code: "UNLICENSED_CONSTRUAL", message: "no", anchor: "", location: "s1@1" },
    ]);
    expect(html).toContain("UNLICENSED_CONSTRUAL");
    expect(renderBanner("down", true)).toContain("read-only");
    expect(renderBanner(null, false)).toBe("");
  });
});
