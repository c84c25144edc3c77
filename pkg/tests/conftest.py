from __future__ import annotations

import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
FIXTURES = TESTS_DIR / "fixtures"

# Make sibling test helpers (oracle, textgen) importable from any module.
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))

from bertmatch import Vocab, load_vocab


@pytest.fixture(scope="session")
def vocab_path() -> Path:
    return FIXTURES / "vocab.txt"


@pytest.fixture(scope="session")
def vocab(vocab_path) -> Vocab:
    return load_vocab(vocab_path)
