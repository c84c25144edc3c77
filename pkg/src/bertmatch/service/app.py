"""FastAPI application exposing the scoring engine.

The vocabulary and the default provider are loaded when the app is built,
so a misconfigured process fails before it starts serving. The deterministic
test provider may be swapped in per request for hermetic clients.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..embedding import (
    DETERMINISTIC_TEST,
    MODEL_FILE,
    DeterministicProvider,
    ProviderConfig,
    make_provider,
)
from ..errors import ProviderLoadError, ScoringError
from ..scoring import score_with_provider
from ..serialize import canonical_json, report_payload
from ..version import ENGINE_VERSION
from ..vocab import load_vocab
from .config import ServiceConfig
from .schemas import HealthResponse, ScoreOptions, ScoreRequest, ScoreResponse

_STATUS_BY_CODE = {
    "EMPTY_INPUT": 422,
    "SEQUENCE_TOO_LONG": 422,
    "DIMENSION_MISMATCH": 422,
    "PROVIDER_UNAVAILABLE": 503,
}


class _BadRequest(Exception):
    def __init__(self, message: str):
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error_code": code, "message": message})


def provider_config_from(config: ServiceConfig) -> ProviderConfig:
    if config.provider == "model":
        return ProviderConfig(
            kind=MODEL_FILE, model_path=config.model_path, layer=config.model_layer
        )
    return ProviderConfig(
        kind=DETERMINISTIC_TEST,
        dim=config.dim,
        seed=config.seed,
        contextual=config.contextual,
    )


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    if not config.vocab_path:
        raise ValueError("a vocabulary path is required (BERTMATCH_VOCAB_PATH)")
    vocab = load_vocab(config.vocab_path, lowercase=config.lowercase)
    default_provider = make_provider(provider_config_from(config))
    default_is_test = config.provider != "model"

    app = FastAPI(title="bertmatch", version=ENGINE_VERSION)

    if config.cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def resolve_provider(options: ScoreOptions | None):
        if options is None:
            return default_provider
        has_test_options = options.seed is not None or options.contextual is not None
        wants_model = options.provider == "model" or (
            options.provider is None and not default_is_test
        )
        if wants_model:
            if has_test_options:
                raise _BadRequest("seed/contextual apply only to the test provider")
            if default_is_test:
                raise ProviderLoadError("no model provider is loaded in this process")
            return default_provider
        if not has_test_options and options.provider is None:
            return default_provider
        seed = config.seed if options.seed is None else options.seed
        contextual = config.contextual if options.contextual is None else options.contextual
        return DeterministicProvider(
            ProviderConfig(
                kind=DETERMINISTIC_TEST, dim=config.dim, seed=seed, contextual=contextual
            )
        )

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        where = ".".join(str(part) for part in first.get("loc", ()))
        what = first.get("msg", "invalid request body")
        return _error_response(400, "BAD_REQUEST", f"{where}: {what}" if where else what)

    @app.exception_handler(_BadRequest)
    async def on_bad_request(request: Request, exc: _BadRequest):
        return _error_response(400, "BAD_REQUEST", exc.message)

    @app.exception_handler(ScoringError)
    async def on_scoring_error(request: Request, exc: ScoringError):
        status = _STATUS_BY_CODE.get(exc.error_code, 500)
        return _error_response(status, exc.error_code, str(exc))

    @app.post("/score", response_model=ScoreResponse)
    def handle_score(request: ScoreRequest) -> Response:
        options = request.options
        provider = resolve_provider(options)
        truncate = bool(options.truncate) if options else False
        report = score_with_provider(
            request.reference, request.candidate, vocab, provider, truncate=truncate
        )
        payload = report_payload(report, provider.provider_id)
        return Response(content=canonical_json(payload), media_type="application/json")

    @app.get("/health", response_model=HealthResponse)
    def handle_health() -> HealthResponse:
        return HealthResponse(status="ok", provider_id=default_provider.provider_id)

    return app
