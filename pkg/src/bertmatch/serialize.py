"""The versioned (v1) wire payload, shared by the HTTP service and the CLI.

Both front doors build responses through this module, so a pair scored via
either path serializes to identical bytes.
"""

from __future__ import annotations

import json

from .scoring import MatchRecord, ScoreReport
from .tokenizer import Token
from .version import ENGINE_VERSION


def _token_payload(token: Token) -> dict:
    return {
        "surface": token.surface,
        "char_span": [token.char_span[0], token.char_span[1]],
        "is_special": token.is_special,
        "is_subword": token.is_subword,
    }


def _match_payload(match: MatchRecord) -> dict:
    return {
        "source": match.source_index,
        "target": match.target_index,
        "score": match.score,
    }


def report_payload(
    report: ScoreReport, provider_id: str, engine_version: str = ENGINE_VERSION
) -> dict:
    """v1 response document; key order is part of the frozen contract."""
    return {
        "precision": report.precision,
        "recall": report.recall,
        "f1": report.f1,
        "reference_tokens": [_token_payload(t) for t in report.reference_tokens.tokens],
        "candidate_tokens": [_token_payload(t) for t in report.candidate_tokens.tokens],
        "recall_matches": [_match_payload(m) for m in report.recall_matches],
        "precision_matches": [_match_payload(m) for m in report.precision_matches],
        "unmatched_reference": list(report.unmatched_reference),
        "unmatched_candidate": list(report.unmatched_candidate),
        "provider_id": provider_id,
        "engine_version": engine_version,
    }


def canonical_json(payload: dict) -> str:
    """Compact, non-escaped JSON; float formatting is repr round-trip."""
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False)
