"""Exception hierarchy shared by all legis modules.

Grouping matters for the HTTP layer and the CLI: subclasses of
:class:`ValidationError` map to "the caller asked for something invalid"
(HTTP 400, exit code 1), :class:`IoError` subclasses to broken inputs on
disk (exit code 2), and :class:`GatewayError` subclasses to an unreachable
or misbehaving model backend (HTTP 503).
"""

from __future__ import annotations


class LegisError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LegisError):
    """Caller-supplied input violates a precondition."""


class IoError(LegisError):
    """A corpus, snapshot, or index file is missing or unreadable."""


# --- corpus ingestion ---------------------------------------------------

class MalformedXml(IoError):
    pass


class MissingIdentifier(IoError):
    """Document carries no work-level URI to identify the act."""


class UnparsableHref(ValidationError):
    """Reference target does not follow the act URI scheme."""


class ManifestNotFound(IoError):
    pass


class EmptyDraft(ValidationError):
    pass


# --- graph store ----------------------------------------------------------

class NodeNotFound(LegisError):
    pass


class KindMismatch(ValidationError):
    pass


class VersionMismatch(IoError):
    pass


class CorruptSnapshot(IoError):
    pass


class FrozenStateError(LegisError):
    """Mutation attempted on frozen state, or a query requires a freeze first."""


# --- text metrics ---------------------------------------------------------

class EmptyText(ValidationError):
    pass


class NoLetters(ValidationError):
    pass


# --- vector index ---------------------------------------------------------

class DuplicateId(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class EmptyIndex(LegisError):
    pass


# --- llm gateway ----------------------------------------------------------

class GatewayError(LegisError):
    """Chat/embedding backend failed after retries."""


class BackendUnavailable(GatewayError):
    pass


class Timeout(GatewayError):
    pass


class UnknownTemplate(ValidationError):
    pass


class UnboundVariable(ValidationError):
    """A prompt template placeholder was left without a value."""


class UnparsableOutput(GatewayError):
    """Model output could not be parsed into the expected structure."""


# --- pipeline / reporting / monitoring -------------------------------------

class EmptyInput(ValidationError):
    pass


class EmptyTopics(GatewayError):
    """Topic extraction produced no usable topics."""


class EmptyComparisonSet(ValidationError):
    pass


class InvalidRange(ValidationError):
    pass
