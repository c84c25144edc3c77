"""HTTP scoring service: FastAPI app, request/response schemas, env config."""

from .app import create_app
from .config import ServiceConfig

__all__ = ["create_app", "ServiceConfig"]
