"""Pydantic request/response models for the v1 scoring API."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel


class ScoreOptions(BaseModel):
    truncate: bool = False
    contextual: Optional[bool] = None
    seed: Optional[int] = None
    provider: Optional[Literal["test", "model"]] = None


class ScoreRequest(BaseModel):
    reference: str
    candidate: str
    options: Optional[ScoreOptions] = None


class TokenModel(BaseModel):
    surface: str
    char_span: tuple[int, int]
    is_special: bool
    is_subword: bool


class MatchModel(BaseModel):
    source: int
    target: int
    score: float


class ScoreResponse(BaseModel):
    precision: float
    recall: float
    f1: float
    reference_tokens: list[TokenModel]
    candidate_tokens: list[TokenModel]
    recall_matches: list[MatchModel]
    precision_matches: list[MatchModel]
    unmatched_reference: list[int]
    unmatched_candidate: list[int]
    provider_id: str
    engine_version: str


class HealthResponse(BaseModel):
    status: str
    provider_id: str


class ErrorResponse(BaseModel):
    error_code: str
    message: str
