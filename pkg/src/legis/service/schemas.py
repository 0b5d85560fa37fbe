"""Request and response models for the HTTP API."""

from __future__ import annotations

from datetime import date

from pydantic import BaseModel, Field

API_VERSION = "1"


class ErrorBody(BaseModel):
    code: str
    message: str


class HealthResponse(BaseModel):
    status: str
    snapshot_loaded: bool
    index_loaded: bool
    llm_mode: str


class LawSummary(BaseModel):
    law_id: str
    title: str
    publication_date: date | None = None
    ministry_domain: str | None = None
    article_count: int = 0


class LawListResponse(BaseModel):
    total: int
    limit: int
    offset: int
    items: list[LawSummary]


class ProfileModel(BaseModel):
    word_count: int
    sentence_count: int
    letter_count: int
    syllable_count: int
    avg_word_length: float
    avg_sentence_length: float
    gerund_ratio: float
    adjective_ratio: float
    pronoun_ratio: float
    flesch: float
    gulpease: float
    embedding_index: float
    center_embedding_index: float


class LawDetailResponse(LawSummary):
    profile: ProfileModel


class MetricStatsModel(BaseModel):
    subject_value: float
    set_mean: float
    set_std: float
    z_score: float
    percentile: float


class StatsBundleModel(BaseModel):
    metrics: dict[str, MetricStatsModel]
    set_size: int
    set_descriptor: str


class ComparisonSelector(BaseModel):
    year: int | None = None
    domain: str | None = None
    ids: list[str] | None = None


class LawReportRequest(BaseModel):
    comparison: ComparisonSelector = Field(default_factory=ComparisonSelector)
    polish: bool = True


class LawReportResponse(BaseModel):
    law_id: str
    stats: StatsBundleModel
    report_text: str
    report_fallback: bool


class DraftAnalyzeRequest(BaseModel):
    title: str = ""
    text: str = ""
    as_of: date | None = None
    k: int | None = Field(default=None, ge=1, le=500)


class TopicSetModel(BaseModel):
    seed_topics: list[str]
    expanded_topics: list[str]
    expansion_failed: bool


class RelevantLawModel(BaseModel):
    law_id: str
    similarity: float


class RelevantLawSetModel(BaseModel):
    as_of: date
    entries: list[RelevantLawModel]


class DraftReportResponse(BaseModel):
    draft_id: str
    as_of: date
    profile: ProfileModel
    comparison: StatsBundleModel
    relevant_laws: RelevantLawSetModel
    report_text: str
    report_fallback: bool


class LandscapeRequest(BaseModel):
    input: str
    as_of: date | None = None
    k: int | None = Field(default=None, ge=1, le=500)


class FoundationModel(BaseModel):
    target_id: str
    citing_count: int
    relative_frequency: float


class LandscapeResponse(BaseModel):
    input_text: str
    as_of: date
    topics: TopicSetModel
    relevant_laws: RelevantLawSetModel
    foundations: list[FoundationModel]


class TimeseriesPoint(BaseModel):
    period: date
    value: float


class TimeseriesResponse(BaseModel):
    metric: str
    granularity: str
    points: list[TimeseriesPoint]


class DegreeBin(BaseModel):
    degree: int
    count: int


class DegreeResponse(BaseModel):
    edge_kind: str
    direction: str
    bins: list[DegreeBin]
