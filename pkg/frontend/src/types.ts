/** Wire types mirroring the annotation service's JSON responses. */

export interface SentenceBody {
  id: string;
  tokens: string[];
}

export interface RecordBody {
  sent_id: string;
  indices: number[];
  lemma: string;
  label: string;
  annotator: string;
  status: string;
}

export interface DocumentBody {
  id: string;
  metadata: Record<string, string>;
  sentences: SentenceBody[];
  records: RecordBody[];
}

export interface DocumentState {
  version: number;
  document: DocumentBody;
}

export interface MatchTarget {
  indices: number[];
  lemma: string;
  surface: string[];
  discontinuous: boolean;
}

export interface Candidate {
  label: string;
  scene: string;
  function: string;
  rank: number;
  anchor: string;
  condition: string | null;
}

export interface Checklist {
  key: string;
  title: string;
  prompts: string[];
  outcomes: Record<string, string>;
  anchor: string;
}

export interface Issue {
  severity: "error" | "warning";
  code: string;
  message: string;
  anchor: string;
  location: string;
}
