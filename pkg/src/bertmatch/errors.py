"""Exception types shared across the scoring pipeline.

Every error carries a stable ``error_code`` so the HTTP layer and the CLI
report the same taxonomy.
"""


class ScoringError(Exception):
    error_code = "INTERNAL"


class DuplicateVocabEntry(ScoringError):
    error_code = "DUPLICATE_VOCAB_ENTRY"


class IncompleteVocab(ScoringError):
    error_code = "INCOMPLETE_VOCAB"


class EmptyInput(ScoringError):
    error_code = "EMPTY_INPUT"


class SequenceTooLong(ScoringError):
    error_code = "SEQUENCE_TOO_LONG"


class DimensionMismatch(ScoringError):
    error_code = "DIMENSION_MISMATCH"


class ProviderLoadError(ScoringError):
    error_code = "PROVIDER_UNAVAILABLE"


class ProviderRuntimeError(ScoringError):
    error_code = "PROVIDER_UNAVAILABLE"
