"""HTTP facade over the corpus: read-only handlers over frozen state.

Responses are rendered through one canonical JSON encoder (sorted keys,
compact separators) so identical requests against the same snapshot return
identical bytes, which golden tests and the UI rely on.
"""

from __future__ import annotations

import json
from datetime import date

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from legis.errors import (
    GatewayError,
    IoError,
    LegisError,
    NodeNotFound,
    ValidationError,
)
from legis.graph.store import EDGE_ABROGATES, EDGE_CITES, EDGE_CONTAINS
from legis.ingest.drafts import parse_draft
from legis.monitor.export import export_dataset
from legis.monitor.timeseries import degree_distribution, timeseries
from legis.pipeline.draft import DraftReport, analyze_draft
from legis.pipeline.landscape import LandscapeResult, landscape
from legis.report.render import polish_report, render_report
from legis.report.stats import StatsBundle, comparison_stats
from legis.service import schemas
from legis.service.state import AppState
from legis.textmetrics.metrics import ReadabilityProfile

_EDGE_KINDS = (EDGE_CITES, EDGE_CONTAINS, EDGE_ABROGATES)


def canonical_response(model: BaseModel, status_code: int = 200) -> Response:
    body = json.dumps(
        model.model_dump(mode="json"), ensure_ascii=False, sort_keys=True, separators=(",", ":")
    )
    return Response(content=body, media_type="application/json", status_code=status_code)


def _status_for(exc: LegisError) -> int:
    if isinstance(exc, NodeNotFound):
        return 404
    if isinstance(exc, (GatewayError, IoError)):
        return 503
    if isinstance(exc, ValidationError):
        return 400
    return 400


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="legis", version=schemas.API_VERSION)
    if getattr(state, "cors_origins", None):
        app.add_middleware(
            CORSMiddleware,
            allow_origins=state.cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.middleware("http")
    async def add_api_version(request: Request, call_next):
        response = await call_next(request)
        if request.url.path.startswith("/api") or request.url.path == "/healthz":
            response.headers["x-api-version"] = schemas.API_VERSION
        return response

    @app.exception_handler(LegisError)
    async def legis_error_handler(request: Request, exc: LegisError):
        body = schemas.ErrorBody(code=type(exc).__name__, message=str(exc))
        return canonical_response(body, status_code=_status_for(exc))

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request: Request, exc: RequestValidationError):
        body = schemas.ErrorBody(code="RequestValidation", message=str(exc.errors()))
        return canonical_response(body, status_code=400)

    # --- health -----------------------------------------------------------

    @app.get("/healthz", response_model=schemas.HealthResponse)
    def healthz() -> Response:
        return canonical_response(
            schemas.HealthResponse(
                status="ok",
                snapshot_loaded=len(state.graph) > 0,
                index_loaded=state.index is not None and len(state.index) > 0,
                llm_mode=state.gateway.mode,
            )
        )

    # --- laws ---------------------------------------------------------------

    @app.get("/api/laws", response_model=schemas.LawListResponse)
    def list_laws(
        year: int | None = None,
        domain: str | None = None,
        q: str | None = None,
        limit: int = Query(default=50, ge=1, le=500),
        offset: int = Query(default=0, ge=0),
    ) -> Response:
        laws = sorted(state.graph.laws(), key=lambda n: n.node_id)
        selected = [
            n
            for n in laws
            if (year is None or _year_of(n.properties.get("publication_date")) == year)
            and (domain is None or (n.properties.get("ministry_domain") or "").lower() == domain.lower())
            and (q is None or q.lower() in (n.properties.get("title") or "").lower())
        ]
        items = [_law_summary(state, n.node_id) for n in selected[offset : offset + limit]]
        return canonical_response(
            schemas.LawListResponse(total=len(selected), limit=limit, offset=offset, items=items)
        )

    @app.get("/api/laws/{law_id:path}/report", include_in_schema=False)
    def law_report_hint(law_id: str) -> Response:
        raise ValidationError("use POST for /api/laws/{id}/report")

    @app.post("/api/laws/{law_id:path}/report", response_model=schemas.LawReportResponse)
    def law_report(law_id: str, request: schemas.LawReportRequest) -> Response:
        law_id = _normalize_law_id(law_id)
        _require_real_law(state, law_id)
        subject = state.profile_of(law_id)
        others_ids, descriptor = _comparison_set(state, law_id, request.comparison)
        others = [state.profile_of(i) for i in others_ids]
        bundle = comparison_stats(subject, others, set_descriptor=descriptor)
        markdown = render_report(bundle, locale=state.locale)
        if request.polish:
            report_text, fallback = polish_report(markdown, state.gateway)
        else:
            report_text, fallback = markdown, False
        return canonical_response(
            schemas.LawReportResponse(
                law_id=law_id,
                stats=_stats_model(bundle),
                report_text=report_text,
                report_fallback=fallback,
            )
        )

    @app.get("/api/laws/{law_id:path}", response_model=schemas.LawDetailResponse)
    def law_detail(law_id: str) -> Response:
        law_id = _normalize_law_id(law_id)
        _require_real_law(state, law_id)
        summary = _law_summary(state, law_id)
        return canonical_response(
            schemas.LawDetailResponse(
                **summary.model_dump(), profile=_profile_model(state.profile_of(law_id))
            )
        )

    # --- pipelines -------------------------------------------------------------

    @app.post("/api/drafts/analyze", response_model=schemas.DraftReportResponse)
    def drafts_analyze(request: schemas.DraftAnalyzeRequest) -> Response:
        draft = parse_draft(request.text, {"title": request.title})
        report = analyze_draft(state.ctx, draft, as_of=request.as_of, k=request.k)
        return canonical_response(_draft_report_model(report))

    @app.post("/api/landscape", response_model=schemas.LandscapeResponse)
    def landscape_endpoint(request: schemas.LandscapeRequest) -> Response:
        result = landscape(state.ctx, request.input, as_of=request.as_of, k=request.k)
        return canonical_response(_landscape_model(result))

    # --- monitoring --------------------------------------------------------------

    @app.get("/api/monitor/timeseries", response_model=schemas.TimeseriesResponse)
    def monitor_timeseries(
        metric: str,
        granularity: str = "year",
        from_date: date = Query(alias="from"),
        to_date: date = Query(alias="to"),
        format: str = Query(default="json", pattern="^(json|csv)$"),
    ) -> Response:
        series = timeseries(state.graph, metric, granularity, from_date, to_date)
        if format == "csv":
            return Response(content=export_dataset(series, "csv"), media_type="text/csv")
        return canonical_response(
            schemas.TimeseriesResponse(
                metric=series.metric,
                granularity=series.granularity,
                points=[schemas.TimeseriesPoint(period=p, value=v) for p, v in series.points],
            )
        )

    @app.get("/api/monitor/degree", response_model=schemas.DegreeResponse)
    def monitor_degree(
        kind: str = Query(default=EDGE_CITES),
        direction: str = Query(default="in", pattern="^(in|out)$"),
        format: str = Query(default="json", pattern="^(json|csv)$"),
    ) -> Response:
        if kind not in _EDGE_KINDS:
            raise ValidationError(f"kind must be one of {_EDGE_KINDS}")
        histogram = degree_distribution(state.graph, kind, direction)
        if format == "csv":
            return Response(content=export_dataset(histogram, "csv"), media_type="text/csv")
        return canonical_response(
            schemas.DegreeResponse(
                edge_kind=histogram.edge_kind,
                direction=histogram.direction,
                bins=[
                    schemas.DegreeBin(degree=d, count=c) for d, c in sorted(histogram.bins.items())
                ],
            )
        )

    return app


# --- converters ---------------------------------------------------------------


def _normalize_law_id(law_id: str) -> str:
    return law_id if law_id.startswith("/") else f"/{law_id}"


def _year_of(value: date | None) -> int | None:
    return value.year if value is not None else None


def _require_real_law(state: AppState, law_id: str) -> None:
    node = state.graph.node(law_id)
    if node.kind != "Law" or node.properties.get("stub"):
        raise NodeNotFound(law_id)


def _law_summary(state: AppState, law_id: str) -> schemas.LawSummary:
    node = state.graph.node(law_id)
    return schemas.LawSummary(
        law_id=law_id,
        title=node.properties.get("title") or "",
        publication_date=node.properties.get("publication_date"),
        ministry_domain=node.properties.get("ministry_domain"),
        article_count=len(state.graph.articles_of(law_id)),
    )


def _comparison_set(
    state: AppState, subject_id: str, selector: schemas.ComparisonSelector
) -> tuple[list[str], str]:
    if selector.ids:
        ids = [i for i in selector.ids if i != subject_id and i in state.texts]
        return sorted(ids), f"ids ({len(ids)})"
    laws = sorted(state.graph.laws(), key=lambda n: n.node_id)
    parts = []
    if selector.year is not None:
        laws = [n for n in laws if _year_of(n.properties.get("publication_date")) == selector.year]
        parts.append(f"year={selector.year}")
    if selector.domain is not None:
        laws = [
            n
            for n in laws
            if (n.properties.get("ministry_domain") or "").lower() == selector.domain.lower()
        ]
        parts.append(f"domain={selector.domain}")
    ids = [n.node_id for n in laws if n.node_id != subject_id and n.node_id in state.texts]
    return ids, ", ".join(parts) if parts else "corpus"


def _profile_model(p: ReadabilityProfile) -> schemas.ProfileModel:
    return schemas.ProfileModel(**p.to_dict())


def _stats_model(bundle: StatsBundle) -> schemas.StatsBundleModel:
    return schemas.StatsBundleModel(
        metrics={
            name: schemas.MetricStatsModel(
                subject_value=s.subject_value,
                set_mean=s.set_mean,
                set_std=s.set_std,
                z_score=s.z_score,
                percentile=s.percentile,
            )
            for name, s in bundle.metrics.items()
        },
        set_size=bundle.set_size,
        set_descriptor=bundle.set_descriptor,
    )


def _relevant_model(result) -> schemas.RelevantLawSetModel:
    return schemas.RelevantLawSetModel(
        as_of=result.as_of,
        entries=[
            schemas.RelevantLawModel(law_id=e.law_id, similarity=e.similarity)
            for e in result.entries
        ],
    )


def _landscape_model(result: LandscapeResult) -> schemas.LandscapeResponse:
    return schemas.LandscapeResponse(
        input_text=result.input_text,
        as_of=result.as_of,
        topics=schemas.TopicSetModel(
            seed_topics=result.topics.seed_topics,
            expanded_topics=result.topics.expanded_topics,
            expansion_failed=result.topics.expansion_failed,
        ),
        relevant_laws=_relevant_model(result.relevant_laws),
        foundations=[
            schemas.FoundationModel(
                target_id=f.target_id,
                citing_count=f.citing_count,
                relative_frequency=f.relative_frequency,
            )
            for f in result.foundations
        ],
    )


def _draft_report_model(report: DraftReport) -> schemas.DraftReportResponse:
    return schemas.DraftReportResponse(
        draft_id=report.draft_id,
        as_of=report.as_of,
        profile=_profile_model(report.profile),
        comparison=_stats_model(report.comparison),
        relevant_laws=_relevant_model(report.relevant_laws),
        report_text=report.report_text,
        report_fallback=report.report_fallback,
    )
