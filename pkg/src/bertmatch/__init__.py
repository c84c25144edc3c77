"""Token-level text similarity scoring with greedy embedding matches.

Tokenize reference and candidate text with WordPiece, embed every token,
take the best cosine match per token in each direction, and report
precision/recall/F1 together with the full match structure.
"""

from .version import ENGINE_VERSION
from .version import ENGINE_VERSION as __version__
from .errors import (
    DimensionMismatch,
    DuplicateVocabEntry,
    EmptyInput,
    IncompleteVocab,
    ProviderLoadError,
    ProviderRuntimeError,
    ScoringError,
    SequenceTooLong,
)
from .vocab import Vocab, load_vocab
from .tokenizer import Token, TokenSequence, normalize, pre_tokenize, tokenize, wordpiece
from .embedding import (
    DETERMINISTIC_TEST,
    MODEL_FILE,
    DeterministicProvider,
    EmbeddingSequence,
    ModelFileProvider,
    ProviderConfig,
    deterministic_vector,
    embed,
    make_provider,
)
from .scoring import (
    MatchRecord,
    ScoreReport,
    SimilarityMatrix,
    f1,
    precision_matching,
    recall_matching,
    score,
    score_embeddings,
    score_with_provider,
    similarity_matrix,
    unmatched,
)
from .serialize import canonical_json, report_payload

__all__ = [
    "__version__",
    "ENGINE_VERSION",
    "ScoringError",
    "DuplicateVocabEntry",
    "IncompleteVocab",
    "EmptyInput",
    "SequenceTooLong",
    "DimensionMismatch",
    "ProviderLoadError",
    "ProviderRuntimeError",
    "Vocab",
    "load_vocab",
    "Token",
    "TokenSequence",
    "normalize",
    "pre_tokenize",
    "wordpiece",
    "tokenize",
    "DETERMINISTIC_TEST",
    "MODEL_FILE",
    "ProviderConfig",
    "EmbeddingSequence",
    "DeterministicProvider",
    "ModelFileProvider",
    "deterministic_vector",
    "embed",
    "make_provider",
    "SimilarityMatrix",
    "MatchRecord",
    "ScoreReport",
    "similarity_matrix",
    "recall_matching",
    "precision_matching",
    "f1",
    "unmatched",
    "score",
    "score_embeddings",
    "score_with_provider",
    "report_payload",
    "canonical_json",
]
