"""Similarity scoring: pairwise cosines, greedy best-match precision/recall/F1,
and unmatched-token detection.

Special tokens are excluded from the similarity matrix; match indices refer
to positions within the non-special scoring token lists. All arithmetic is
double precision regardless of provider storage precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddingSequence, ProviderConfig, make_provider
from .errors import DimensionMismatch, EmptyInput
from .tokenizer import TokenSequence, tokenize
from .vocab import Vocab

RECALL = "recall"
PRECISION = "precision"


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """k x m cosine grid over scoring tokens, with maps back to sequence positions."""

    values: np.ndarray
    ref_token_indices: tuple[int, ...]
    cand_token_indices: tuple[int, ...]


@dataclass(frozen=True)
class MatchRecord:
    """One directed best-match edge; indices are scoring-list positions."""

    direction: str
    source_index: int
    target_index: int
    score: float


@dataclass(frozen=True, eq=False)
class ScoreReport:
    precision: float
    recall: float
    f1: float
    recall_matches: tuple[MatchRecord, ...]
    precision_matches: tuple[MatchRecord, ...]
    unmatched_reference: tuple[int, ...]
    unmatched_candidate: tuple[int, ...]
    reference_tokens: TokenSequence
    candidate_tokens: TokenSequence


def similarity_matrix(ref: EmbeddingSequence, cand: EmbeddingSequence) -> SimilarityMatrix:
    """Pairwise cosine(x_i, x_j) over the non-special tokens of both sides.

    A zero-norm row yields cosine 0 rather than NaN.
    """
    if ref.vectors.shape[1] != cand.vectors.shape[1]:
        raise DimensionMismatch(
            f"reference dim {ref.vectors.shape[1]} != candidate dim {cand.vectors.shape[1]}"
        )
    ref_idx = ref.tokens.scoring_indices()
    cand_idx = cand.tokens.scoring_indices()
    if not ref_idx or not cand_idx:
        raise EmptyInput("both sides need at least one scoring token")

    a = np.asarray(ref.vectors, dtype=np.float64)[ref_idx]
    b = np.asarray(cand.vectors, dtype=np.float64)[cand_idx]
    denom = np.outer(np.linalg.norm(a, axis=1), np.linalg.norm(b, axis=1))
    raw = a @ b.T
    values = np.divide(raw, denom, out=np.zeros_like(raw), where=denom > 0.0)
    return SimilarityMatrix(values, tuple(ref_idx), tuple(cand_idx))


def recall_matching(sim: SimilarityMatrix) -> tuple[float, tuple[MatchRecord, ...]]:
    """Row maxima: for each reference token, its best candidate match.

    Ties break to the lowest candidate index (argmax keeps the first max).
    """
    targets = sim.values.argmax(axis=1)
    scores = sim.values[np.arange(sim.values.shape[0]), targets]
    matches = tuple(
        MatchRecord(RECALL, i, int(t), float(s))
        for i, (t, s) in enumerate(zip(targets, scores))
    )
    return float(scores.mean()), matches


def precision_matching(sim: SimilarityMatrix) -> tuple[float, tuple[MatchRecord, ...]]:
    """Column maxima: for each candidate token, its best reference match."""
    targets = sim.values.argmax(axis=0)
    scores = sim.values[targets, np.arange(sim.values.shape[1])]
    matches = tuple(
        MatchRecord(PRECISION, j, int(t), float(s))
        for j, (t, s) in enumerate(zip(targets, scores))
    )
    return float(scores.mean()), matches


def f1(p: float, r: float) -> float:
    """Harmonic mean, guarded: 0 whenever p + r <= 0."""
    if p + r <= 0.0:
        return 0.0
    return 2.0 * p * r / (p + r)


def unmatched(
    recall_matches: tuple[MatchRecord, ...],
    precision_matches: tuple[MatchRecord, ...],
    k: int,
    m: int,
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Tokens never selected as a best match by the opposing side."""
    ref_hit = {match.target_index for match in precision_matches}
    cand_hit = {match.target_index for match in recall_matches}
    return (
        tuple(sorted(set(range(k)) - ref_hit)),
        tuple(sorted(set(range(m)) - cand_hit)),
    )


def score_embeddings(ref: EmbeddingSequence, cand: EmbeddingSequence) -> ScoreReport:
    """Assemble the full report from two embedded sequences."""
    sim = similarity_matrix(ref, cand)
    r_value, r_matches = recall_matching(sim)
    p_value, p_matches = precision_matching(sim)
    un_ref, un_cand = unmatched(
        r_matches, p_matches, len(sim.ref_token_indices), len(sim.cand_token_indices)
    )
    return ScoreReport(
        precision=p_value,
        recall=r_value,
        f1=f1(p_value, r_value),
        recall_matches=r_matches,
        precision_matches=p_matches,
        unmatched_reference=un_ref,
        unmatched_candidate=un_cand,
        reference_tokens=ref.tokens,
        candidate_tokens=cand.tokens,
    )


def score_with_provider(
    reference_text: str,
    candidate_text: str,
    vocab: Vocab,
    provider,
    truncate: bool = False,
) -> ScoreReport:
    """tokenize -> embed -> similarity -> matchings -> f1 -> unmatched."""
    ref_seq = tokenize(reference_text, vocab, truncate=truncate)
    cand_seq = tokenize(candidate_text, vocab, truncate=truncate)
    return score_embeddings(provider.embed(ref_seq), provider.embed(cand_seq))


def score(
    reference_text: str,
    candidate_text: str,
    vocab: Vocab,
    config: ProviderConfig,
    truncate: bool = False,
) -> ScoreReport:
    """End-to-end scoring of a text pair under the configured provider."""
    return score_with_provider(
        reference_text, candidate_text, vocab, make_provider(config), truncate=truncate
    )
