/** Workbench session state and its transitions.
 *
 * The invariants: a selected target always belongs to the open document,
 * and the dirty flag is set exactly when there are unsaved edits.  Label
 * overrides not in the service's candidate list are blocked here, and the
 * server re-blocks them on save (422).
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  Candidate,
  Checklist,
  DocumentBody,
  DocumentState,
  Issue,
  MatchTarget,
  RecordBody,
} from "./types.js";

export interface Selection {
  sentId: string;
  indices: number[];
  lemma: string;
  surface: string[];
}

export type SaveOutcome =
  | { kind: "saved"; version: number }
  | { kind: "conflict" }
  | { kind: "rejected"; issues: Issue[] }
  | { kind: "offline" };

export class WorkbenchState {
  document: DocumentBody | null = null;
  version = 0;
  selection: Selection | null = null;
  candidates: Candidate[] = [];
  preselected: number | null = null;
  checklist: Checklist | null = null;
  checklistAnswer: string | null = null;
  dirty = false;
  readOnly = false;
  banner: string | null = null;
  inlineIssues: Issue[] = [];
  autoTargets: Map<string, MatchTarget[]> = new Map();

  open(state: DocumentState): void {
    this.document = state.document;
    this.version = state.version;
    this.selection = null;
    this.candidates = [];
    this.preselected = null;
    this.checklist = null;
    this.checklistAnswer = null;
    this.dirty = false;
    this.inlineIssues = [];
  }

  sentence(sentId: string): string[] {
    const sent = this.document?.sentences.find((s) => s.id === sentId);
    return sent ? sent.tokens : [];
  }

  select(sentId: string, indices: number[], lemma: string): Selection {
    const tokens = this.sentence(sentId);
    if (!tokens.length) {
      throw new Error(`sentence ${sentId} is not part of the open document`);
    }
    if (indices.some((i) => i < 0 || i >= tokens.length)) {
      throw new Error(`target ${indices} outside sentence ${sentId}`);
    }
    this.selection = {
      sentId,
      indices: [...indices].sort((a, b) => a - b),
      lemma,
      surface: indices.map((i) => tokens[i]),
    };
    this.candidates = [];
    this.preselected = null;
    this.checklist = null;
    this.checklistAnswer = null;
    return this.selection;
  }

  setCandidates(candidates: Candidate[]): void {
    this.candidates = candidates;
    this.preselected = candidates.length ? 0 : null;
  }

  /** Candidate picked by number key (1-based, as shown in the panel). */
  pick(oneBased: number): Candidate | null {
    const candidate = this.candidates[oneBased - 1];
    if (!candidate) return null;
    this.preselected = oneBased - 1;
    return candidate;
  }

  startChecklist(checklist: Checklist): void {
    this.checklist = checklist;
    this.checklistAnswer = null;
  }

  /** Answering a checklist prompt preselects the mapped candidate. */
  answerChecklist(answer: string): Candidate | null {
    if (!this.checklist) return null;
    const label = this.checklist.outcomes[answer];
    if (label === undefined) return null;
    this.checklistAnswer = answer;
    const index = this.candidates.findIndex((c) => c.label === label);
    if (index >= 0) this.preselected = index;
    return index >= 0 ? this.candidates[index] : null;
  }

  /** Attach a label to the selected target; only service candidates pass. */
  applyLabel(label: string, annotator: string): RecordBody | null {
    if (!this.document || !this.selection) return null;
    if (!this.candidates.some((c) => c.label === label)) {
      this.banner = `"${label}" is not licensed for ${this.selection.lemma}`;
      return null;
    }
    const record: RecordBody = {
      sent_id: this.selection.sentId,
      indices: this.selection.indices,
      lemma: this.selection.lemma,
      label,
      annotator,
      status: "draft",
    };
    const records = this.document.records;
    const existing = records.findIndex(
      (r) =>
        r.sent_id === record.sent_id &&
        r.annotator === annotator &&
        r.indices.join() === record.indices.join(),
    );
    if (existing >= 0) {
      records[existing] = record;
    } else {
      records.push(record);
    }
    this.dirty = true;
    this.banner = null;
    return record;
  }

  async save(api: ApiClient): Promise<SaveOutcome> {
    if (!this.document) return { kind: "offline" };
    try {
      const result = await api.putDocument(this.document.id, this.version, this.document);
      this.version = result.version;
      this.dirty = false;
      this.inlineIssues = [];
      return { kind: "saved", version: result.version };
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        return { kind: "conflict" };
      }
      if (err instanceof ApiError && err.status === 422) {
        this.inlineIssues = Array.isArray(err.detail) ? (err.detail as Issue[]) : [];
        return { kind: "rejected", issues: this.inlineIssues };
      }
      this.banner = "service unreachable; changes kept locally";
      return { kind: "offline" };
    }
  }

  /** Conflict resolution: drop local edits and refetch the server copy. */
  async refetch(api: ApiClient): Promise<void> {
    if (!this.document) return;
    this.open(await api.getDocument(this.document.id));
  }
}
