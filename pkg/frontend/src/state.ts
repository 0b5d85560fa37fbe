// Client-side view state: which module is active, the current inputs, and
// the latest API responses. The state holds server payloads verbatim; no
// field here is ever derived from another.

import type {
  DraftReportResponse,
  LandscapeResponse,
  LawDetailResponse,
  LawListResponse,
  LawReportResponse,
  TimeseriesResponse,
} from "./types.js";

export type ModuleName = "law_analysis" | "draft_support" | "landscape" | "monitor";

export interface ViewState {
  active_module: ModuleName;
  lawAnalysis: {
    query: string;
    year: string;
    domain: string;
    laws: LawListResponse | null;
    detail: LawDetailResponse | null;
    report: LawReportResponse | null;
  };
  draftSupport: {
    title: string;
    text: string;
    report: DraftReportResponse | null;
    landscape: LandscapeResponse | null;
  };
  landscape: {
    input: string;
    result: LandscapeResponse | null;
  };
  monitor: {
    metric: string;
    granularity: string;
    from: string;
    to: string;
    series: TimeseriesResponse | null;
  };
}

export function initialState(): ViewState {
  return {
    active_module: "law_analysis",
    lawAnalysis: { query: "", year: "", domain: "", laws: null, detail: null, report: null },
    draftSupport: { title: "", text: "", report: null, landscape: null },
    landscape: { input: "", result: null },
    monitor: {
      metric: "laws_enacted",
      granularity: "year",
      from: "1990-01-01",
      to: "2020-12-31",
      series: null,
    },
  };
}
