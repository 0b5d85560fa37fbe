from legis.llm.gateway import (
    MODE_LIVE,
    MODE_MOCK,
    TEMPLATE_IDS,
    ChatRequest,
    GatewayConfig,
    LlmGateway,
    load_template,
    parse_topic_list,
    render_template,
)
from legis.llm.guardrail import DEFAULT_OPINION_PATTERNS, GuardrailVerdict, check_neutrality

__all__ = [
    "ChatRequest",
    "DEFAULT_OPINION_PATTERNS",
    "GatewayConfig",
    "GuardrailVerdict",
    "LlmGateway",
    "MODE_LIVE",
    "MODE_MOCK",
    "TEMPLATE_IDS",
    "check_neutrality",
    "load_template",
    "parse_topic_list",
    "render_template",
]
