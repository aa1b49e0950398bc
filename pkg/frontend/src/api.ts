// Thin fetch wrapper around the read-only JSON API. The client never
// recomputes rankings or frequencies; it renders these responses as-is.

import type {
  DocumentDetail,
  DocumentsResponse,
  EntryPoint,
  FrequenciesResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, url: string) {
    super(`API request failed (${status}): ${url}`);
  }
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async get<T>(path: string, params?: Record<string, string>): Promise<T> {
    const query = params ? `?${new URLSearchParams(params)}` : "";
    const url = `${this.baseUrl}${path}${query}`;
    const response = await fetch(url);
    if (!response.ok) {
      throw new ApiError(response.status, url);
    }
    return response.json() as Promise<T>;
  }

  entryPoints(): Promise<EntryPoint[]> {
    return this.get("/api/entry-points");
  }

  documents(tokens: string[]): Promise<DocumentsResponse> {
    return this.get("/api/documents", { tokens: tokens.join(",") });
  }

  tokenFrequencies(tokens: string[]): Promise<FrequenciesResponse> {
    return this.get("/api/token-frequencies", { tokens: tokens.join(",") });
  }

  document(id: string, tokens?: string[]): Promise<DocumentDetail> {
    const params = tokens && tokens.length ? { tokens: tokens.join(",") } : undefined;
    return this.get(`/api/documents/${encodeURIComponent(id)}`, params);
  }
}
