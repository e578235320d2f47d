/** Thin typed client for the annotation service.
 *
 * All label and license data shown in the UI comes from these calls; the
 * client keeps no lexicon copy of its own.
 */

import type {
  Candidate,
  Checklist,
  DocumentBody,
  DocumentState,
  Issue,
  MatchTarget,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  detail: unknown;

  constructor(status: number, detail: unknown) {
    super(`service returned ${status}`);
    this.status = status;
    this.detail = detail;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  baseUrl: string;
  fetcher: FetchLike;

  constructor(baseUrl = "", fetcher: FetchLike = (...args) => fetch(...args)) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetcher = fetcher;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetcher(this.baseUrl + path, {
      ...init,
      headers: { "content-type": "application/json", ...(init?.headers ?? {}) },
    });
    let body: unknown = null;
    const text = await response.text();
    if (text) {
      try {
        body = JSON.parse(text);
      } catch {
        body = text;
      }
    }
    if (!response.ok) {
      throw new ApiError(response.status, (body as { detail?: unknown })?.detail ?? body);
    }
    return body as T;
  }

  listDocuments(): Promise<{ ids: string[] }> {
    return this.request("/documents");
  }

  getDocument(id: string): Promise<DocumentState> {
    return this.request(`/documents/${encodeURIComponent(id)}`);
  }

  putDocument(id: string, version: number, document: DocumentBody): Promise<{ version: number }> {
    return this.request(`/documents/${encodeURIComponent(id)}`, {
      method: "PUT",
      body: JSON.stringify({ version, document }),
    });
  }

  match(tokens: string[], sourceId = ""): Promise<{ targets: MatchTarget[] }> {
    return this.request("/match", {
      method: "POST",
      body: JSON.stringify({ tokens, source_id: sourceId }),
    });
  }

  suggest(lemma: string, indices: number[], surface: string[]): Promise<{ candidates: Candidate[]; issues: Issue[] }> {
    return this.request("/suggest", {
      method: "POST",
      body: JSON.stringify({ lemma, indices, surface }),
    });
  }

  diagnostics(key: string): Promise<{ checklists: Checklist[] }> {
    return this.request(`/diagnostics/${encodeURIComponent(key)}`);
  }

  validate(document: DocumentBody): Promise<{ issues: Issue[] }> {
    return this.request("/validate", { method: "POST", body: JSON.stringify(document) });
  }
}
