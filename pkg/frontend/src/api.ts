// Thin typed client over the legis JSON API. Every method returns the
// server payload untouched; CSV downloads stay as raw bytes so the file a
// user saves is byte-identical to the HTTP response.

import type {
  ApiErrorBody,
  DegreeResponse,
  DraftAnalyzeRequest,
  DraftReportResponse,
  Granularity,
  HealthResponse,
  LandscapeRequest,
  LandscapeResponse,
  LawDetailResponse,
  LawListResponse,
  LawReportRequest,
  LawReportResponse,
  TimeseriesMetric,
  TimeseriesResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export interface LawListQuery {
  year?: number;
  domain?: string;
  q?: string;
  limit?: number;
  offset?: number;
}

export interface TimeseriesQuery {
  metric: TimeseriesMetric;
  granularity: Granularity;
  from: string;
  to: string;
}

async function parseError(response: Response): Promise<ApiError> {
  let body: ApiErrorBody = { code: "unknown", message: response.statusText };
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, body.code, body.message);
}

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`);
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, payload: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  health(): Promise<HealthResponse> {
    return this.getJson("/healthz");
  }

  listLaws(query: LawListQuery = {}): Promise<LawListResponse> {
    const params = new URLSearchParams();
    if (query.year !== undefined) params.set("year", String(query.year));
    if (query.domain) params.set("domain", query.domain);
    if (query.q) params.set("q", query.q);
    if (query.limit !== undefined) params.set("limit", String(query.limit));
    if (query.offset !== undefined) params.set("offset", String(query.offset));
    const qs = params.toString();
    return this.getJson(`/api/laws${qs ? `?${qs}` : ""}`);
  }

  lawDetail(lawId: string): Promise<LawDetailResponse> {
    return this.getJson(`/api/laws${lawId}`);
  }

  lawReport(lawId: string, request: LawReportRequest): Promise<LawReportResponse> {
    return this.postJson(`/api/laws${lawId}/report`, request);
  }

  analyzeDraft(request: DraftAnalyzeRequest): Promise<DraftReportResponse> {
    return this.postJson("/api/drafts/analyze", request);
  }

  landscape(request: LandscapeRequest): Promise<LandscapeResponse> {
    return this.postJson("/api/landscape", request);
  }

  timeseries(query: TimeseriesQuery): Promise<TimeseriesResponse> {
    const params = new URLSearchParams({
      metric: query.metric,
      granularity: query.granularity,
      from: query.from,
      to: query.to,
    });
    return this.getJson(`/api/monitor/timeseries?${params}`);
  }

  // Raw bytes of the CSV export; the caller saves them unmodified.
  async timeseriesCsv(query: TimeseriesQuery): Promise<Blob> {
    const params = new URLSearchParams({
      metric: query.metric,
      granularity: query.granularity,
      from: query.from,
      to: query.to,
      format: "csv",
    });
    const response = await this.fetchFn(`${this.baseUrl}/api/monitor/timeseries?${params}`);
    if (!response.ok) throw await parseError(response);
    return response.blob();
  }

  degree(kind: string, direction: "in" | "out"): Promise<DegreeResponse> {
    const params = new URLSearchParams({ kind, direction });
    return this.getJson(`/api/monitor/degree?${params}`);
  }
}

// Ignores the result of every call except the most recent one, so a slow
// response can never overwrite the state of a newer request.
export class LatestOnly {
  private seq = 0;

  async run<T>(task: () => Promise<T>): Promise<T | undefined> {
    const ticket = ++this.seq;
    const result = await task();
    return ticket === this.seq ? result : undefined;
  }
}
