// Shapes of the JSON API responses this client renders.

export type ConceptClass = "a" | "b" | "c";

export interface Member {
  token: string;
  surface: string;
  class: ConceptClass;
  frequency: number;
}

export interface MstEdge {
  u: string;
  v: string;
  distance: number;
}

export interface EntryPoint {
  id: number;
  members: Member[];
  mst: MstEdge[];
  anchors: string[];
  layout: Record<string, [number, number]>;
}

export interface RankedDocument {
  id: string;
  title: string;
  authors: string[];
  year: number;
  venue: string;
  collection: "S" | "T";
  match_count: number;
  matched_tokens: string[];
}

export interface DocumentsResponse {
  documents: RankedDocument[];
  warnings: { unknown_tokens: string[] };
}

export interface TokenFrequency {
  token: string;
  surface: string;
  count: number;
}

export interface FrequenciesResponse {
  frequencies: TokenFrequency[];
  warnings: { unknown_tokens: string[] };
}

export interface DocumentDetail {
  id: string;
  title: string;
  authors: string[];
  year: number;
  venue: string;
  collection: "S" | "T";
  raw_keywords: string[];
  tokens: string[];
  surfaces: Record<string, string>;
  match_count?: number;
  matched_tokens?: string[];
}
