import pytest

from versant.corpus import VerseRef
from versant.errors import DomainError
from versant.ngrams import NgramTable, extract_ngrams, top_k
from versant.preprocess import TokenizedVerse


def _tv(verse, *tokens):
    return TokenizedVerse(ref=VerseRef(5, verse), tokens=tokens)


def test_extract_counts_within_verse():
    table = extract_ngrams([_tv(1, "a", "b", "a", "b")], 2)
    assert table.counts == {("a", "b"): 2, ("b", "a"): 1}
    assert table.total == 3


def test_windows_never_cross_verses():
    table = extract_ngrams([_tv(1, "a", "b"), _tv(2, "b", "c")], 2)
    assert ("b", "b") not in table.counts
    assert table.total == 2


def test_short_verse_contributes_nothing():
    table = extract_ngrams([_tv(1, "only"), _tv(2)], 3)
    assert table.total == 0
    assert len(table) == 0


def test_n_validation():
    with pytest.raises(DomainError):
        extract_ngrams([], 4)
    with pytest.raises(DomainError):
        NgramTable(n=0, counts={})


def test_table_rejects_malformed_keys():
    with pytest.raises(DomainError):
        NgramTable(n=2, counts={("a",): 1})
    with pytest.raises(DomainError):
        NgramTable(n=2, counts={("a", "b"): 0})


def test_top_k_ordering_and_ties():
    table = NgramTable(n=1, counts={("b",): 2, ("a",): 2, ("c",): 5})
    assert top_k(table, 3) == [(("c",), 5), (("a",), 2), (("b",), 2)]
    assert top_k(table, 1) == [(("c",), 5)]
    with pytest.raises(DomainError):
        top_k(table, 0)


def test_top_k_ignores_map_order():
    counts = {("a",): 1, ("b",): 3, ("c",): 2}
    reversed_counts = dict(reversed(list(counts.items())))
    a = NgramTable(n=1, counts=counts)
    b = NgramTable(n=1, counts=reversed_counts)
    assert top_k(a, 3) == top_k(b, 3)
