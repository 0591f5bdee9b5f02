// Thin fetch client for the portfolio service. Every number the UI shows
// comes out of these responses.

import type {
  AdvanceRequest,
  AdvanceResponse,
  AllocationResponse,
  ApiErrorBody,
  CivpsResponse,
  Idea,
  IdeaCreate,
  IdeaDetail,
  IdeaListResponse,
  QuadrantsResponse,
  ScorecardCreate,
  SimulateRequest,
  SimulateResponse,
} from "./types";

// Same-origin by default (the dev server proxies to the API); override for
// a split deployment.
let apiBase = "";

export function setApiBase(base: string): void {
  apiBase = base.replace(/\/$/, "");
}

export class ApiRequestError extends Error {
  readonly status: number;
  readonly code: string;
  readonly path: string | null;

  constructor(body: ApiErrorBody) {
    super(body.message);
    this.status = body.status;
    this.code = body.code;
    this.path = body.path;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${apiBase}${path}`, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let body: ApiErrorBody;
    try {
      body = (await response.json()) as ApiErrorBody;
    } catch {
      body = {
        status: response.status,
        code: "INTERNAL",
        message: `request failed with status ${response.status}`,
        path: null,
      };
    }
    throw new ApiRequestError(body);
  }
  return (await response.json()) as T;
}

function post<T>(path: string, body?: unknown): Promise<T> {
  return request<T>(path, {
    method: "POST",
    body: body === undefined ? undefined : JSON.stringify(body),
  });
}

export const api = {
  listIdeas: (): Promise<IdeaListResponse> => request("/ideas"),
  getIdea: (id: string): Promise<IdeaDetail> =>
    request(`/ideas/${encodeURIComponent(id)}`),
  createIdea: (body: IdeaCreate): Promise<Idea> => post("/ideas", body),
  addScorecard: (id: string, body: ScorecardCreate): Promise<Idea> =>
    post(`/ideas/${encodeURIComponent(id)}/scorecards`, body),
  getCivps: (id: string): Promise<CivpsResponse> =>
    request(`/ideas/${encodeURIComponent(id)}/civps`),
  advance: (id: string, body: AdvanceRequest): Promise<AdvanceResponse> =>
    post(`/ideas/${encodeURIComponent(id)}/advance`, body),
  simulate: (body: SimulateRequest): Promise<SimulateResponse> =>
    post("/simulate", body),
  simulateIdea: (id: string, body?: SimulateRequest): Promise<SimulateResponse> =>
    post(`/ideas/${encodeURIComponent(id)}/simulate`, body),
  getAllocation: (): Promise<AllocationResponse> => request("/portfolio/allocation"),
  getQuadrants: (): Promise<QuadrantsResponse> => request("/portfolio/quadrants"),
};

export type Api = typeof api;
