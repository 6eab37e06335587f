// Typed client for the mutation-session service. The client never computes
// anything mathematical; every displayed number comes from these payloads.

export interface QuiverNode {
  position: number; // 1-based slot
  id: number;
  name: string;
  label: string;
  dims: number[];
  projective: boolean;
}

export interface QuiverEdge {
  src: number; // 1-based slot positions
  tgt: number;
  mult: number;
}

export interface HistoryEntry {
  k: number;
  display: string;
}

export interface SessionState {
  session: string;
  type: string;
  r: number;
  n: number;
  nodes: QuiverNode[];
  edges: QuiverEdge[];
  b_cols: number[][];
  cluster_variables: string[];
  exchangeable: number[];
  history: HistoryEntry[];
  state_hash: string;
  sequence?: { x: number; y: number; display: string };
}

export interface ExportPayload {
  type: string;
  initial: number[];
  history: number[];
  sequences: string[];
  state_hash: string;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(path, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    const detail =
      typeof body.detail === "string"
        ? body.detail
        : JSON.stringify(body.detail ?? body);
    throw new ApiError(res.status, detail);
  }
  return body as T;
}

export function createSession(
  type: string,
  history?: number[],
): Promise<SessionState> {
  return request<SessionState>("/session", {
    method: "POST",
    body: JSON.stringify(history ? { type, history } : { type }),
  });
}

export function getSession(id: string): Promise<SessionState> {
  return request<SessionState>(`/session/${id}`);
}

export function mutateSession(id: string, k: number): Promise<SessionState> {
  return request<SessionState>(`/session/${id}/mutate`, {
    method: "POST",
    body: JSON.stringify({ k }),
  });
}

export function exportSession(id: string): Promise<ExportPayload> {
  return request<ExportPayload>(`/session/${id}/export`);
}
