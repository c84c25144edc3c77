"""Vocabulary handling for WordPiece tokenization.

File format: UTF-8 text, one token surface per line, id = 0-based line
number. Compatible with published BERT-style vocab files.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

from .errors import DuplicateVocabEntry, IncompleteVocab

UNK_SURFACE = "[UNK]"
CLS_SURFACE = "[CLS]"
SEP_SURFACE = "[SEP]"


@dataclass(frozen=True)
class Vocab:
    """Immutable surface -> id map plus the special-token conventions."""

    entries: dict[str, int]
    unk_surface: str = UNK_SURFACE
    cls_surface: str = CLS_SURFACE
    sep_surface: str = SEP_SURFACE
    lowercase: bool = True

    def __post_init__(self) -> None:
        ids = sorted(self.entries.values())
        if ids != list(range(len(self.entries))):
            raise IncompleteVocab("vocabulary ids must be unique and contiguous from 0")
        missing = [
            s
            for s in (self.unk_surface, self.cls_surface, self.sep_surface)
            if s not in self.entries
        ]
        if missing:
            raise IncompleteVocab(f"vocabulary is missing required entries: {missing}")

    def __contains__(self, surface: str) -> bool:
        return surface in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def unk_id(self) -> int:
        return self.entries[self.unk_surface]

    @property
    def cls_id(self) -> int:
        return self.entries[self.cls_surface]

    @property
    def sep_id(self) -> int:
        return self.entries[self.sep_surface]


def load_vocab(source: str | Path | BinaryIO, lowercase: bool = True) -> Vocab:
    """Read newline-delimited surfaces from a path or binary stream.

    Line i holds the surface for id i. The lowercase flag records the text
    convention of the model the vocabulary belongs to (uncased by default).
    """
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    else:
        data = source.read()
    lines = data.decode("utf-8").splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    entries: dict[str, int] = {}
    for index, surface in enumerate(lines):
        if surface == "":
            # A blank interior line would silently shift every later id.
            raise IncompleteVocab(f"line {index}: blank line inside vocabulary")
        if surface in entries:
            raise DuplicateVocabEntry(f"line {index}: duplicate surface {surface!r}")
        entries[surface] = index
    return Vocab(entries=entries, lowercase=lowercase)
