import type {
  ConsistencyResponse,
  CreateRequest,
  HealthResponse,
  HintResponse,
  SessionView,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

// Thin client over the service endpoints; every method returns the parsed
// JSON body or throws ApiError with the server's detail message.
export class PuzzleApi {
  private baseUrl: string;
  private fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl;
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(this.baseUrl + path, init);
    if (!res.ok) {
      let detail = `${res.status}`;
      try {
        const body = (await res.json()) as { detail?: unknown };
        if (body && body.detail !== undefined) {
          detail =
            typeof body.detail === "string"
              ? body.detail
              : JSON.stringify(body.detail);
        }
      } catch {
        // non-JSON error body, keep the status code
      }
      throw new ApiError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  private post<T>(path: string, body?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: body === undefined ? "{}" : JSON.stringify(body),
    });
  }

  health(): Promise<HealthResponse> {
    return this.request<HealthResponse>("/health");
  }

  createSession(req: CreateRequest): Promise<SessionView> {
    return this.post<SessionView>("/puzzles", req);
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/puzzles/${id}`);
  }

  click(id: string, vertex: number): Promise<SessionView> {
    return this.post<SessionView>(`/puzzles/${id}/click`, { vertex });
  }

  undo(id: string): Promise<SessionView> {
    return this.post<SessionView>(`/puzzles/${id}/undo`);
  }

  reset(id: string): Promise<SessionView> {
    return this.post<SessionView>(`/puzzles/${id}/reset`);
  }

  hint(id: string, target: string): Promise<HintResponse> {
    return this.request<HintResponse>(
      `/puzzles/${id}/hint?target=${encodeURIComponent(target)}`,
    );
  }

  consistency(id: string): Promise<ConsistencyResponse> {
    return this.request<ConsistencyResponse>(`/puzzles/${id}/consistency`);
  }
}
