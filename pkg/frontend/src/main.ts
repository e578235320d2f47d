/** DOM wiring: document picker, token strip, candidate panel, checklists,
 * keyboard-first annotation (digits pick candidates, Enter applies,
 * Ctrl+S saves). */

import { ApiClient } from "./api.js";
import { WorkbenchState } from "./state.js";
import {
  renderBanner,
  renderCandidates,
  renderChecklist,
  renderIssues,
  renderSentence,
  targetViews,
} from "./render.js";
import type { MatchTarget } from "./types.js";

const api = new ApiClient("");
const state = new WorkbenchState();
const annotator = new URLSearchParams(location.search).get("annotator") ?? "workbench";

const el = (id: string): HTMLElement => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
};

function redraw(): void {
  el("banner").innerHTML = renderBanner(state.banner, state.readOnly);
  el("issues").innerHTML = renderIssues(state.inlineIssues);
  el("candidates").innerHTML = renderCandidates(state.candidates, state.preselected);
  el("checklist").innerHTML = renderChecklist(state.checklist, state.checklistAnswer);
  el("save").toggleAttribute("disabled", !state.dirty || state.readOnly);
  el("doc-title").textContent = state.document
    ? `${state.document.id} v${state.version}${state.dirty ? " *" : ""}`
    : "no document";
  if (!state.document) return;
  const parts: string[] = [];
  for (const sentence of state.document.sentences) {
    const matched = state.autoTargets.get(sentence.id) ?? [];
    const views = targetViews(state.document.records, matched, sentence.id);
    parts.push(renderSentence(sentence.id, sentence.tokens, views));
  }
  el("sentences").innerHTML = parts.join("\n");
}

async function openDocument(id: string): Promise<void> {
  try {
    state.open(await api.getDocument(id));
    state.readOnly = false;
    state.banner = null;
    state.autoTargets = new Map();
    if (state.document) {
      for (const sentence of state.document.sentences) {
        const res = await api.match(sentence.tokens, sentence.id);
        state.autoTargets.set(sentence.id, res.targets as MatchTarget[]);
      }
    }
  } catch {
    state.banner = "service unreachable; read-only mode";
    state.readOnly = true;
  }
  redraw();
}

async function onTargetClick(span: HTMLElement): Promise<void> {
  const sentDiv = span.closest(".sentence") as HTMLElement | null;
  if (!sentDiv) return;
  const sentId = sentDiv.dataset.sent ?? "";
  const indices = (span.dataset.indices ?? "").split(",").map(Number);
  const lemma = span.dataset.lemma ?? "";
  const selection = state.select(sentId, indices, lemma);
  try {
    const res = await api.suggest(lemma, selection.indices, selection.surface);
    state.setCandidates(res.candidates);
    const diag = await api.diagnostics(lemma);
    state.checklist = diag.checklists[0] ?? null;
  } catch {
    state.banner = "suggestion service unreachable";
  }
  redraw();
}

async function save(): Promise<void> {
  const outcome = await state.save(api);
  if (outcome.kind === "conflict") {
    const takeTheirs = confirm(
      "Someone else saved this document first. Reload their version (your unsaved edits are lost)?",
    );
    if (takeTheirs) {
      await state.refetch(api);
    } else {
      state.banner = "conflict: resolve by saving again after review";
    }
  }
  redraw();
}

document.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  if (target.closest(".target")) {
    void onTargetClick(target.closest(".target") as HTMLElement);
  } else if (target.closest(".candidate")) {
    const index = Number((target.closest(".candidate") as HTMLElement).dataset.index);
    state.pick(index + 1);
    redraw();
  } else if (target.closest(".outcome")) {
    const answer = (target.closest(".outcome") as HTMLElement).dataset.answer ?? "";
    state.answerChecklist(answer);
    redraw();
  }
});

document.addEventListener("keydown", (event) => {
  if (state.readOnly) return;
  if (event.key >= "1" && event.key <= "9") {
    state.pick(Number(event.key));
    redraw();
  } else if (event.key === "Enter" && state.preselected !== null) {
    const candidate = state.candidates[state.preselected];
    if (candidate) {
      state.applyLabel(candidate.label, annotator);
      redraw();
    }
  } else if ((event.ctrlKey || event.metaKey) && event.key === "s") {
    event.preventDefault();
    void save();
  }
});

el("save").addEventListener("click", () => void save());

async function boot(): Promise<void> {
  try {
    const docs = await api.listDocuments();
    const picker = el("picker") as HTMLSelectElement;
    picker.innerHTML = docs.ids.map((id) => `<option>${id}</option>`).join("");
    picker.addEventListener("change", () => void openDocument(picker.value));
    if (docs.ids.length) await openDocument(docs.ids[0]);
  } catch {
    state.banner = "service unreachable; read-only mode";
    state.readOnly = true;
    redraw();
  }
}

void boot();
