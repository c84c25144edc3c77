"""Embedding providers that turn token sequences into vector sequences.

Two kinds: a hash-derived deterministic provider for hermetic, model-free
testing, and a TorchScript-backed provider that runs a real transformer
from a local model file. Both embed every token, specials included; the
score engine decides which rows participate in scoring.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ProviderLoadError, ProviderRuntimeError
from .tokenizer import TokenSequence

DETERMINISTIC_TEST = "deterministic_test"
MODEL_FILE = "model_file"

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_LANE_STEP = 0x9E3779B97F4A7C15
_OUTPUT_MIX = 0x2545F4914F6CDD1D
_POSITION_MIX = 0xD1B54A32D192ED03
_MASK64 = (1 << 64) - 1
_TWO64 = float(1 << 64)


@dataclass(frozen=True)
class ProviderConfig:
    """Provider selection; dim/seed/contextual apply to deterministic_test,
    model_path/layer to model_file."""

    kind: str = DETERMINISTIC_TEST
    dim: int = 8
    seed: int = 0
    contextual: bool = False
    model_path: str | Path | None = None
    layer: int = -1

    def __post_init__(self) -> None:
        if self.kind not in (DETERMINISTIC_TEST, MODEL_FILE):
            raise ValueError(f"unknown provider kind {self.kind!r}")
        if self.kind == DETERMINISTIC_TEST and self.dim < 1:
            raise ValueError("embedding dimension must be >= 1")
        if self.kind == MODEL_FILE and self.model_path is None:
            raise ProviderLoadError("model_file provider requires model_path")


@dataclass(frozen=True, eq=False)
class EmbeddingSequence:
    """Tokens paired with one d-vector per token (specials included)."""

    tokens: TokenSequence
    vectors: np.ndarray
    provider_id: str


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & _MASK64
    return h


def deterministic_vector(surface: str, position: int, config: ProviderConfig) -> np.ndarray:
    """Hash-derived embedding lane values in (-1, 1).

    Exact wrapping 64-bit integer arithmetic throughout, so the result is
    bit-reproducible regardless of platform.
    """
    h = fnv1a64(surface.encode("utf-8")) ^ (config.seed & _MASK64)
    if config.contextual:
        h ^= (position * _POSITION_MIX) & _MASK64
    out = np.empty(config.dim, dtype=np.float64)
    for j in range(config.dim):
        m = ((h ^ (((j + 1) * _LANE_STEP) & _MASK64)) * _OUTPUT_MIX) & _MASK64
        out[j] = 2.0 * (m / _TWO64) - 1.0
    return out


class DeterministicProvider:
    """Referentially transparent test provider: vectors depend only on the
    token surface, the seed, and (if contextual) the token position."""

    def __init__(self, config: ProviderConfig):
        if config.kind != DETERMINISTIC_TEST:
            raise ValueError("DeterministicProvider requires a deterministic_test config")
        self.config = config
        self.provider_id = (
            f"{DETERMINISTIC_TEST}:dim={config.dim}:seed={config.seed}"
            f":contextual={'true' if config.contextual else 'false'}"
        )

    @property
    def dim(self) -> int:
        return self.config.dim

    def embed(self, seq: TokenSequence) -> EmbeddingSequence:
        rows = [
            deterministic_vector(tok.surface, position, self.config)
            for position, tok in enumerate(seq.tokens)
        ]
        return EmbeddingSequence(seq, np.vstack(rows), self.provider_id)


class ModelFileProvider:
    """Runs a TorchScript transformer from local disk. No network access.

    Module contract: called as module(input_ids) with input_ids of shape
    [1, k] (int64 vocabulary ids); must return a [1, k, d] or [k, d]
    tensor, or a list/tuple of per-layer tensors of that shape, from which
    config.layer selects (default -1, the last hidden layer).
    """

    def __init__(self, config: ProviderConfig):
        if config.kind != MODEL_FILE:
            raise ValueError("ModelFileProvider requires a model_file config")
        try:
            import torch
        except ImportError as exc:
            raise ProviderLoadError("torch is required for the model_file provider") from exc
        self._torch = torch
        self.config = config
        try:
            self._module = torch.jit.load(str(config.model_path), map_location="cpu")
            self._module.eval()
        except Exception as exc:
            raise ProviderLoadError(f"cannot load model file {config.model_path}: {exc}") from exc
        try:
            probe = self._run([0, 0])
        except Exception as exc:
            raise ProviderLoadError(f"model file is incompatible: {exc}") from exc
        self._dim = probe.shape[1]
        self._lock = threading.Lock()
        self.provider_id = f"{MODEL_FILE}:{Path(str(config.model_path)).name}:layer={config.layer}"

    @property
    def dim(self) -> int:
        return self._dim

    def _run(self, ids: list[int]) -> np.ndarray:
        torch = self._torch
        with torch.no_grad():
            out = self._module(torch.tensor([ids], dtype=torch.int64))
        if isinstance(out, (list, tuple)):
            out = out[self.config.layer]
        arr = out.detach().cpu().numpy()
        if arr.ndim == 3:
            arr = arr[0]
        if arr.ndim != 2 or arr.shape[0] != len(ids):
            raise ProviderRuntimeError(
                f"model returned shape {arr.shape}, expected ({len(ids)}, d)"
            )
        return np.asarray(arr, dtype=np.float64)

    def embed(self, seq: TokenSequence) -> EmbeddingSequence:
        ids = [tok.id for tok in seq.tokens]
        # Inference is single-flight; the loaded module is not assumed thread-safe.
        with self._lock:
            try:
                arr = self._run(ids)
            except ProviderRuntimeError:
                raise
            except Exception as exc:
                raise ProviderRuntimeError(f"inference failed: {exc}") from exc
        if not np.all(np.isfinite(arr)):
            raise ProviderRuntimeError("model produced non-finite embedding values")
        return EmbeddingSequence(seq, arr, self.provider_id)


def make_provider(config: ProviderConfig) -> DeterministicProvider | ModelFileProvider:
    if config.kind == MODEL_FILE:
        return ModelFileProvider(config)
    return DeterministicProvider(config)


def embed(seq: TokenSequence, config: ProviderConfig) -> EmbeddingSequence:
    """One-shot convenience: build the provider for config and embed seq."""
    return make_provider(config).embed(seq)
