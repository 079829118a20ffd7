// Typed client for the cluster-tilt HTTP service.  The fetch function is
// injectable so tests replay recorded responses; raw bodies are kept
// alongside parsed data because the round-trip contract is byte-level.

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface TiltingSummands {
  summands: number[];
}

export interface SessionInfo {
  session: string;
  quiver: string;
  n: number;
  h: number;
  objects: number;
  tilting: TiltingSummands;
  names: string[];
}

export interface ArVertex {
  id: number;
  name: string;
  slice: number;
  vertex: number;
  dims: number[] | null;
  shifted: boolean;
}

export interface ArView {
  mode: string;
  vertices: ArVertex[];
  arrows: [number, number][];
  tau: [number, number][];
  deleted?: number[];
  projectives?: number[];
  gammaDims?: Record<string, number[]>;
  tauGamma?: [number, number][];
}

export interface RelationTerm {
  path: number[];
  coeff: string;
}

export interface Presentation {
  vertices: string[];
  arrows: { src: number; tgt: number }[];
  relations: RelationTerm[][];
  isHereditary: boolean;
  hasCycles: boolean;
  gldim: { flag: string; value: number | null };
  dimTotal: number;
}

export interface ExchangeInfo {
  M: number;
  Mstar: number;
  B: number[];
  Bprime: number[];
}

export interface MutateResponse {
  session: string;
  history: number;
  previous: TiltingSummands;
  tilting: TiltingSummands;
  completions: number[];
  current: number;
  exchange: ExchangeInfo;
  presentation: Presentation;
  ar: ArView;
}

export interface TiltingList {
  session: string;
  count: number;
  current: TiltingSummands;
  all: TiltingSummands[];
}

export interface Raw<T> {
  raw: string;
  data: T;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function readJson<T>(resp: Response): Promise<Raw<T>> {
  const raw = (await resp.text()).replace(/\n$/, "");
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch {
    throw new ApiError(resp.status, "BadResponse", raw.slice(0, 200));
  }
  if (!resp.ok) {
    const err = parsed as { error?: string; message?: string };
    throw new ApiError(resp.status, err.error ?? "Error", err.message ?? raw);
  }
  return { raw, data: parsed as T };
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private get(path: string) {
    return this.fetchFn(this.base + path);
  }

  private post(path: string, body: unknown) {
    return this.fetchFn(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  async createSession(quiver: string): Promise<Raw<SessionInfo>> {
    return readJson(await this.post("/api/session", { quiver }));
  }

  async ar(session: string, mode: string): Promise<Raw<ArView>> {
    return readJson(await this.get(`/api/session/${session}/ar?mode=${mode}`));
  }

  async tilting(session: string): Promise<Raw<TiltingList>> {
    return readJson(await this.get(`/api/session/${session}/tilting`));
  }

  async endo(session: string): Promise<Raw<Presentation>> {
    return readJson(await this.get(`/api/session/${session}/endo`));
  }

  async mutate(
    session: string,
    at: string,
    expect?: number[],
  ): Promise<Raw<MutateResponse>> {
    const body: { at: string; expect?: number[] } = { at };
    if (expect) body.expect = expect;
    return readJson(await this.post(`/api/session/${session}/mutate`, body));
  }
}
