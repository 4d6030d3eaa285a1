// Wire types for the puzzle service. Field names match the server's JSON.

export interface GraphDocument {
  n_vertices: number;
  edges: [number, number][];
  self_loops: number[];
  labels?: unknown[] | null;
}

// Either an inline puzzle document (version/graph/state) or generator
// template parameters; the server rejects a mix of both.
export interface CreateRequest {
  version?: number;
  graph?: GraphDocument;
  state?: string;

  family?: "grid" | "torus" | "triangular" | "hexagonal";
  dims?: number[];
  wrap?: boolean | boolean[];
  diagonal?: boolean;
  self_affect?: "all" | "none";
  rows?: number;
  radius?: number;
  mask?: number[];
  green?: number[];
}

export interface SessionView {
  id: string;
  n_vertices: number;
  edges: [number, number][];
  self_loops: number[];
  labels: unknown[] | null;
  state: string;
  click_history: number[];
  created_at: string;
  updated_at: string;
}

export interface HintResponse {
  solvable: boolean;
  clicks: number[] | null;
  weight: number | null;
  nullity: number;
  minimal: boolean | null;
  target: string;
  updated_at: string;
}

export interface ConsistencyResponse {
  consistent: boolean;
  state: string;
  replayed: string;
  updated_at: string;
}

export interface HealthResponse {
  status: string;
  sessions: number;
}
