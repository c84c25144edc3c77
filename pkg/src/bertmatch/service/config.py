"""Process-level service configuration, read from BERTMATCH_* env vars."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

ENV_PREFIX = "BERTMATCH_"

_TRUE = {"1", "true", "yes", "on"}


def _as_bool(value: str) -> bool:
    return value.strip().lower() in _TRUE


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    provider: str = "test"  # "test" | "model"
    vocab_path: str | None = None
    model_path: str | None = None
    model_layer: int = -1
    dim: int = 8
    seed: int = 0
    contextual: bool = False
    lowercase: bool = True
    cors_origin: str | None = None

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> "ServiceConfig":
        env = os.environ if env is None else env
        cfg = cls()
        get = lambda name: env.get(ENV_PREFIX + name)
        if get("HOST"):
            cfg.host = get("HOST")
        if get("PORT"):
            cfg.port = int(get("PORT"))
        if get("PROVIDER"):
            cfg.provider = get("PROVIDER")
        if get("VOCAB_PATH"):
            cfg.vocab_path = get("VOCAB_PATH")
        if get("MODEL_PATH"):
            cfg.model_path = get("MODEL_PATH")
        if get("MODEL_LAYER"):
            cfg.model_layer = int(get("MODEL_LAYER"))
        if get("DIM"):
            cfg.dim = int(get("DIM"))
        if get("SEED"):
            cfg.seed = int(get("SEED"))
        if get("CONTEXTUAL"):
            cfg.contextual = _as_bool(get("CONTEXTUAL"))
        if get("LOWERCASE"):
            cfg.lowercase = _as_bool(get("LOWERCASE"))
        if get("CORS_ORIGIN"):
            cfg.cors_origin = get("CORS_ORIGIN")
        return cfg
