"""Uniform client for chat-completion and embedding backends.

Two modes. ``mock`` answers every template with a deterministic rule and
never touches the network, which keeps the whole pipeline reproducible and
testable offline. ``live`` speaks the common chat/embeddings HTTP shape
({model, messages|input, temperature, max_tokens}) against a configured
endpoint, with bounded retries and a cap on concurrent in-flight calls.
"""

from __future__ import annotations

import json
import os
import re
import threading
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

import httpx

from legis.errors import (
    BackendUnavailable,
    GatewayError,
    Timeout,
    UnboundVariable,
    UnknownTemplate,
    UnparsableOutput,
)
from legis.textmetrics.lexicons import italian_stopwords
from legis.textmetrics.metrics import WORD_RE
from legis.vector.embedding import DEFAULT_DIMENSION, feature_hash_vector

TEMPLATE_IDS = ("topic_extraction", "topic_expansion", "report_polish")

_TEMPLATE_PACKAGE = "legis.llm.templates"
_PLACEHOLDER_RE = re.compile(r"\{\{(\w+)\}\}")
_BULLET_RE = re.compile(r"^\s*(?:[-*•]+|\d+[.)])\s*")

MODE_MOCK = "mock"
MODE_LIVE = "live"


@dataclass(frozen=True)
class ChatRequest:
    template_id: str
    variables: dict[str, str] = field(default_factory=dict)
    max_tokens: int = 512
    temperature: float = 0.0


@dataclass
class GatewayConfig:
    mode: str = MODE_MOCK
    url: str = ""
    api_key: str = ""
    model: str = ""
    embed_model: str = ""
    retries: int = 2
    timeout: float = 30.0
    max_in_flight: int = 4
    embed_dimension: int = DEFAULT_DIMENSION

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> "GatewayConfig":
        env = dict(os.environ if env is None else env)
        return cls(
            mode=env.get("LEGIS_LLM_MODE", MODE_MOCK),
            url=env.get("LEGIS_LLM_URL", ""),
            api_key=env.get("LEGIS_LLM_API_KEY", ""),
            model=env.get("LEGIS_LLM_MODEL", ""),
            embed_model=env.get("LEGIS_EMBED_MODEL", ""),
        )


def load_template(template_id: str) -> str:
    if template_id not in TEMPLATE_IDS:
        raise UnknownTemplate(template_id)
    return (resources.files(_TEMPLATE_PACKAGE) / f"{template_id}.txt").read_text(encoding="utf-8")


def render_template(template_id: str, variables: dict[str, str]) -> str:
    text = load_template(template_id)
    placeholders = set(_PLACEHOLDER_RE.findall(text))
    missing = placeholders - set(variables)
    if missing:
        raise UnboundVariable(f"{template_id}: unbound {sorted(missing)}")
    return _PLACEHOLDER_RE.sub(lambda m: str(variables[m.group(1)]), text)


def parse_topic_list(raw: str, max_items: int = 10) -> list[str]:
    """Parse a line- or comma-delimited topic list: lowercase, deduplicated."""
    items: list[str] = []
    seen: set[str] = set()
    for line in raw.splitlines() or [raw]:
        for part in line.split(","):
            topic = _BULLET_RE.sub("", part).strip().lower().strip(".")
            if topic and topic not in seen:
                seen.add(topic)
                items.append(topic)
    if not items:
        raise UnparsableOutput("no topics in output")
    return items[:max_items]


class LlmGateway:
    def __init__(self, config: GatewayConfig | None = None, transport: httpx.BaseTransport | None = None) -> None:
        self.config = config or GatewayConfig()
        self._transport = transport
        self._gate = threading.Semaphore(self.config.max_in_flight)
        self._stopwords = italian_stopwords()

    @property
    def mode(self) -> str:
        return self.config.mode

    # --- chat ---------------------------------------------------------------

    def chat(self, request: ChatRequest) -> str:
        prompt = render_template(request.template_id, request.variables)
        if self.config.mode == MODE_MOCK:
            return self._mock_chat(request)
        return self._live_call(
            {
                "model": self.config.model,
                "messages": [{"role": "user", "content": prompt}],
                "temperature": request.temperature,
                "max_tokens": request.max_tokens,
            },
            extract=_extract_chat_content,
        )

    def _mock_chat(self, request: ChatRequest) -> str:
        if request.template_id == "topic_extraction":
            return ", ".join(self._top_tokens(request.variables.get("text", ""), 3))
        if request.template_id == "topic_expansion":
            topics = [t.strip() for t in request.variables.get("topics", "").split(",") if t.strip()]
            return ", ".join([*topics, *[f"{t}-affine" for t in topics]])
        return request.variables.get("report", "")

    def _top_tokens(self, text: str, k: int) -> list[str]:
        tokens = [t.lower() for t in WORD_RE.findall(text) if t.lower() not in self._stopwords]
        counts = Counter(tokens)
        ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        return [token for token, _ in ranked[:k]]

    # --- embeddings ------------------------------------------------------------

    def embed(self, text: str) -> list[float]:
        if self.config.mode == MODE_MOCK:
            return feature_hash_vector(text, self.config.embed_dimension).tolist()
        payload = {"model": self.config.embed_model, "input": text}
        return self._live_call(payload, extract=_extract_embedding)

    # --- live transport ----------------------------------------------------------

    def _live_call(self, payload: dict, extract):
        if not self.config.url:
            raise BackendUnavailable("LEGIS_LLM_URL is not configured")
        headers = {"content-type": "application/json"}
        if self.config.api_key:
            headers["authorization"] = f"Bearer {self.config.api_key}"
        last_error: GatewayError | None = None
        attempts = self.config.retries + 1
        with self._gate:
            with httpx.Client(timeout=self.config.timeout, transport=self._transport) as client:
                for _ in range(attempts):
                    try:
                        response = client.post(self.config.url, headers=headers, json=payload)
                    except httpx.TimeoutException as exc:
                        last_error = Timeout(str(exc))
                        continue
                    except httpx.TransportError as exc:
                        last_error = BackendUnavailable(str(exc))
                        continue
                    if response.status_code >= 500:
                        last_error = BackendUnavailable(f"backend returned {response.status_code}")
                        continue
                    if response.status_code >= 400:
                        raise GatewayError(f"backend rejected request: {response.status_code}")
                    try:
                        return extract(response.json())
                    except (KeyError, IndexError, TypeError, json.JSONDecodeError) as exc:
                        raise UnparsableOutput(f"unexpected backend payload: {exc}") from exc
        raise last_error if last_error is not None else GatewayError("no attempts made")


def _extract_chat_content(payload: dict) -> str:
    return payload["choices"][0]["message"]["content"]


def _extract_embedding(payload: dict) -> list[float]:
    return [float(x) for x in payload["data"][0]["embedding"]]
