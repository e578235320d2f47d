/** HTML renderers for the token strip, candidate panel and checklists.
 *
 * Pure string builders so they can be tested without a DOM; main.ts owns
 * the actual element wiring.
 */

import type { Candidate, Checklist, Issue, RecordBody } from "./types.js";

const escapeHtml = (s: string): string =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

export interface TargetView {
  indices: number[];
  lemma: string;
  discontinuous: boolean;
  recorded: boolean; // has an annotation record already
}

export function targetViews(
  records: RecordBody[],
  matched: { indices: number[]; lemma: string; discontinuous: boolean }[],
  sentId: string,
): TargetView[] {
  const views: TargetView[] = [];
  const seen = new Set<string>();
  for (const r of records.filter((r) => r.sent_id === sentId)) {
    views.push({
      indices: r.indices,
      lemma: r.lemma,
      discontinuous: spanIsDiscontinuous(r.indices),
      recorded: true,
    });
    seen.add(r.indices.join());
  }
  for (const m of matched) {
    if (!seen.has(m.indices.join())) {
      views.push({ ...m, recorded: false });
    }
  }
  return views.sort((a, b) => a.indices[0] - b.indices[0]);
}

export const spanIsDiscontinuous = (indices: number[]): boolean =>
  indices[indices.length - 1] - indices[0] + 1 !== indices.length;

/** One sentence as a strip of token spans; targets underlined and, for
 * discontinuous ones, linked by a shared group id so the pieces highlight
 * together. */
export function renderSentence(sentId: string, tokens: string[], targets: TargetView[]): string {
  const byToken = new Map<number, { group: number; target: TargetView }>();
  targets.forEach((target, group) => {
    for (const i of target.indices) byToken.set(i, { group, target });
  });
  const spans = tokens.map((tok, i) => {
    const hit = byToken.get(i);
    if (!hit) return `<span class="tok" data-i="${i}">${escapeHtml(tok)}</span>`;
    const classes = ["tok", "target"];
    if (hit.target.discontinuous) classes.push("linked");
    if (hit.target.recorded) classes.push("recorded");
    return (
      `<span class="${classes.join(" ")}" data-i="${i}" data-group="${hit.group}"` +
      ` data-lemma="${escapeHtml(hit.target.lemma)}"` +
      ` data-indices="${hit.target.indices.join(",")}">${escapeHtml(tok)}</span>`
    );
  });
  return `<div class="sentence" data-sent="${escapeHtml(sentId)}">${spans.join(" ")}</div>`;
}

/** Candidate list in service order; number keys pick, guideline anchor and
 * condition shown verbatim so the rule source can be audited. */
export function renderCandidates(candidates: Candidate[], preselected: number | null): string {
  if (!candidates.length) return `<p class="empty">no licensed construals</p>`;
  const items = candidates.map((c, i) => {
    const marker = preselected === i ? " preselected" : "";
    const condition = c.condition ? ` <span class="cond">${escapeHtml(c.condition)}</span>` : "";
    return (
      `<li class="candidate${marker}" data-index="${i}">` +
      `<kbd>${i + 1}</kbd> <span class="label">${escapeHtml(c.label)}</span> ` +
      `<span class="anchor">${escapeHtml(c.anchor)}</span>${condition}</li>`
    );
  });
  return `<ol class="candidates">${items.join("")}</ol>`;
}

export function renderChecklist(checklist: Checklist | null, answer: string | null): string {
  if (!checklist) return "";
  const prompts = checklist.prompts.map((p) => `<li>${escapeHtml(p)}</li>`).join("");
  const buttons = Object.keys(checklist.outcomes)
    .map((key) => {
      const active = key === answer ? " active" : "";
      return `<button class="outcome${active}" data-answer="${escapeHtml(key)}">${escapeHtml(key)}</button>`;
    })
    .join(" ");
  return (
    `<div class="checklist"><h3>${escapeHtml(checklist.title)} ` +
    `<span class="anchor">${escapeHtml(checklist.anchor)}</span></h3>` +
    `<ol>${prompts}</ol><div class="outcomes">${buttons}</div></div>`
  );
}

export function renderIssues(issues: Issue[]): string {
  if (!issues.length) return "";
  const items = issues.map(
    (i) =>
      `<li class="issue ${i.severity}"><code>${escapeHtml(i.code)}</code> ` +
      `${escapeHtml(i.message)}${i.location ? ` <span class="loc">${escapeHtml(i.location)}</span>` : ""}</li>`,
  );
  return `<ul class="issues">${items.join("")}</ul>`;
}

export function renderBanner(text: string | null, readOnly: boolean): string {
  if (!text && !readOnly) return "";
  const mode = readOnly ? ` <strong>read-only</strong>` : "";
  return `<div class="banner">${escapeHtml(text ?? "")}${mode}</div>`;
}
