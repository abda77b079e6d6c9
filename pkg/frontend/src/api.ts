/**
 * Typed client for the graph service.
 *
 * Every connection-set label shown in the UI comes straight from these
 * responses; the client never recomputes jump values on its own.
 */

export interface GraphInfo {
  graph: string;
  n: number;
  jumps: number[];
  full: number[];
  degree: number;
  edge_count: number;
  simple_edge_count: number;
  divisors: number[];
  units: number[];
}

export interface ThetaStep {
  graph: string;
  m: number;
  t: number;
  verdict: "circulant" | "non-circulant";
  jumps: number[] | null;
  fast_symmetric: boolean;
  literal: string | null;
  classification: string;
  detail: Record<string, unknown>;
  permutation: number[];
}

export interface AdamImage {
  graph: string;
  x: number;
  jumps: number[];
  literal: string;
  badge: string;
}

interface FailureBody {
  code?: string;
  message?: string;
}

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

/** Minimal fetch surface so tests can swap in a canned transport. */
export interface FetchResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export interface FetchInit {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}

export type FetchLike = (url: string, init?: FetchInit) => Promise<FetchResponse>;

export class ApiClient {
  constructor(
    private readonly fetchFn: FetchLike,
    private readonly base: string = "",
  ) {}

  private async request<T>(path: string, init?: FetchInit): Promise<T> {
    let response: FetchResponse;
    try {
      response = await this.fetchFn(this.base + path, init);
    } catch (err) {
      throw new ServiceError(0, "network", String(err));
    }
    const body = (await response.json()) as FailureBody;
    if (!response.ok) {
      throw new ServiceError(
        response.status,
        body.code ?? "unknown",
        body.message ?? "request failed",
      );
    }
    return body as T;
  }

  private get<T>(path: string): Promise<T> {
    return this.request(path);
  }

  graph(n: number, jumps: readonly number[]): Promise<GraphInfo> {
    return this.request("/api/graph", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ n, jumps: [...jumps] }),
    });
  }

  theta(
    n: number,
    jumps: readonly number[],
    m: number,
    t: number,
  ): Promise<ThetaStep> {
    return this.get(`/api/graph/C${n}/${jumps.join(",")}/theta?m=${m}&t=${t}`);
  }

  adam(n: number, jumps: readonly number[], x: number): Promise<AdamImage> {
    return this.get(`/api/graph/C${n}/${jumps.join(",")}/adam?x=${x}`);
  }
}
