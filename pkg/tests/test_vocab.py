import io

import pytest

from bertmatch import DuplicateVocabEntry, IncompleteVocab, Vocab, load_vocab

MINI = "[PAD]\n[UNK]\n[CLS]\n[SEP]\nhello\nworld\n##s\n"


def test_load_from_path(tmp_path):
    path = tmp_path / "vocab.txt"
    path.write_text(MINI, encoding="utf-8")
    vocab = load_vocab(path)
    assert len(vocab) == 7
    assert vocab.entries["[PAD]"] == 0
    assert vocab.entries["##s"] == 6


def test_load_from_file_object():
    vocab = load_vocab(io.BytesIO(MINI.encode("utf-8")))
    assert "hello" in vocab
    assert "missing" not in vocab


def test_ids_are_line_numbers():
    vocab = load_vocab(io.BytesIO(MINI.encode("utf-8")))
    assert [vocab.entries[s] for s in MINI.split()] == list(range(7))


def test_special_id_accessors():
    vocab = load_vocab(io.BytesIO(MINI.encode("utf-8")))
    assert vocab.unk_id == 1
    assert vocab.cls_id == 2
    assert vocab.sep_id == 3


def test_duplicate_entry_rejected():
    data = MINI + "hello\n"
    with pytest.raises(DuplicateVocabEntry):
        load_vocab(io.BytesIO(data.encode("utf-8")))


def test_missing_special_rejected():
    data = "[PAD]\n[CLS]\n[SEP]\nhello\n"
    with pytest.raises(IncompleteVocab):
        load_vocab(io.BytesIO(data.encode("utf-8")))


def test_non_contiguous_ids_rejected():
    entries = {"[UNK]": 0, "[CLS]": 1, "[SEP]": 3}
    with pytest.raises(IncompleteVocab):
        Vocab(entries=entries)


def test_fixture_vocab_loads(vocab):
    assert "the" in vocab
    assert "##able" in vocab
    assert "q" not in vocab


def test_trailing_blank_lines_ignored():
    vocab = load_vocab(io.BytesIO((MINI + "\n\n").encode("utf-8")))
    assert len(vocab) == 7
