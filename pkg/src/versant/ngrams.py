"""Frequency tables and top-k extraction for token n-grams.

N-grams are counted per verse and never cross verse boundaries: each
verse is an independent utterance, so a window that would straddle two
verses counts nothing.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .preprocess import TokenizedVerse

Gram = tuple[str, ...]


@dataclass(frozen=True)
class NgramTable:
    """Counts of contiguous token windows of a fixed length."""

    n: int
    counts: Mapping[Gram, int]
    total: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n not in (1, 2, 3):
            raise DomainError(f"n must be 1, 2, or 3, got {self.n!r}")
        for gram, count in self.counts.items():
            if len(gram) != self.n or any(not tok for tok in gram):
                raise DomainError(f"malformed {self.n}-gram key: {gram!r}")
            if count <= 0:
                raise DomainError(f"non-positive count for {gram!r}: {count}")
        object.__setattr__(self, "total", sum(self.counts.values()))

    def __len__(self) -> int:
        return len(self.counts)


def extract_ngrams(verses: Iterable[TokenizedVerse], n: int) -> NgramTable:
    """Count every length-n token window within each verse.

    A verse shorter than n contributes nothing, so the table total is
    sum(max(0, len(v.tokens) - n + 1)) over the input verses.
    """
    if n not in (1, 2, 3):
        raise DomainError(f"n must be 1, 2, or 3, got {n!r}")
    counts: Counter[Gram] = Counter()
    for verse in verses:
        tokens = verse.tokens
        for i in range(len(tokens) - n + 1):
            counts[tokens[i : i + n]] += 1
    return NgramTable(n=n, counts=dict(counts))


def top_k(table: NgramTable, k: int) -> list[tuple[Gram, int]]:
    """Return the k most frequent n-grams.

    Ordered by count descending, then by gram ascending so that equal
    counts always come out in the same order regardless of how the
    underlying map happens to iterate.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k!r}")
    ranked = sorted(table.counts.items(), key=lambda item: (-item[1], item[0]))
    return ranked[:k]
