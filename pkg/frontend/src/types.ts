// Request/response shapes of the legis JSON API (x-api-version 1).
// These mirror the server's pydantic models field by field; the UI never
// derives numbers of its own, it only displays what arrives here.

export interface HealthResponse {
  status: string;
  snapshot_loaded: boolean;
  index_loaded: boolean;
  llm_mode: string;
}

export interface LawSummary {
  law_id: string;
  title: string;
  publication_date: string | null;
  ministry_domain: string | null;
  article_count: number;
}

export interface LawListResponse {
  total: number;
  limit: number;
  offset: number;
  items: LawSummary[];
}

export interface ReadabilityProfile {
  word_count: number;
  sentence_count: number;
  letter_count: number;
  syllable_count: number;
  avg_word_length: number;
  avg_sentence_length: number;
  gerund_ratio: number;
  adjective_ratio: number;
  pronoun_ratio: number;
  flesch: number;
  gulpease: number;
  embedding_index: number;
  center_embedding_index: number;
}

export interface LawDetailResponse extends LawSummary {
  profile: ReadabilityProfile;
}

export interface MetricStats {
  subject_value: number;
  set_mean: number;
  set_std: number;
  z_score: number;
  percentile: number;
}

export interface StatsBundle {
  metrics: Record<string, MetricStats>;
  set_size: number;
  set_descriptor: string;
}

export interface ComparisonSelector {
  year?: number | null;
  domain?: string | null;
  ids?: string[] | null;
}

export interface LawReportRequest {
  comparison: ComparisonSelector;
  polish?: boolean;
}

export interface LawReportResponse {
  law_id: string;
  stats: StatsBundle;
  report_text: string;
  report_fallback: boolean;
}

export interface DraftAnalyzeRequest {
  title: string;
  text: string;
  as_of?: string;
  k?: number;
}

export interface TopicSet {
  seed_topics: string[];
  expanded_topics: string[];
  expansion_failed: boolean;
}

export interface RelevantLaw {
  law_id: string;
  similarity: number;
}

export interface RelevantLawSet {
  as_of: string;
  entries: RelevantLaw[];
}

export interface DraftReportResponse {
  draft_id: string;
  as_of: string;
  profile: ReadabilityProfile;
  comparison: StatsBundle;
  relevant_laws: RelevantLawSet;
  report_text: string;
  report_fallback: boolean;
}

export interface LandscapeRequest {
  input: string;
  as_of?: string;
  k?: number;
}

export interface FoundationCitation {
  target_id: string;
  citing_count: number;
  relative_frequency: number;
}

export interface LandscapeResponse {
  input_text: string;
  as_of: string;
  topics: TopicSet;
  relevant_laws: RelevantLawSet;
  foundations: FoundationCitation[];
}

export interface TimeseriesPoint {
  period: string;
  value: number;
}

export interface TimeseriesResponse {
  metric: string;
  granularity: string;
  points: TimeseriesPoint[];
}

export interface DegreeBin {
  degree: number;
  count: number;
}

export interface DegreeResponse {
  edge_kind: string;
  direction: string;
  bins: DegreeBin[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export type TimeseriesMetric =
  | "laws_enacted"
  | "in_force_count"
  | "avg_outgoing_citations"
  | "new_citations";

export type Granularity = "year" | "month";
