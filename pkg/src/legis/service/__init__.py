from legis.service.app import canonical_response, create_app
from legis.service.state import AppState, ServiceConfig

__all__ = ["AppState", "ServiceConfig", "canonical_response", "create_app"]
