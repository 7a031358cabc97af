"""Word-list polarity scoring: integer scores per verse, exact chapter sums.

The bundled word list follows the one-entry-per-line tab-separated format
with integer scores from -5 to +5. Entries whose key contains whitespace
(a small minority in lists of this lineage) cannot survive tokenization,
so the loader counts and skips them; matching is single-token only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping

from .corpus import Translation, VerseRef
from .errors import ParseError
from .preprocess import PreprocessConfig, preprocess_translation


@dataclass(frozen=True)
class Lexicon:
    """Immutable token -> score map plus loader diagnostics."""

    entries: Mapping[str, int]
    skipped_multiword: int = 0
    overridden: int = 0

    def __post_init__(self) -> None:
        for token, score in self.entries.items():
            if not (-5 <= score <= 5):
                raise ParseError(f"score for {token!r} outside [-5, 5]: {score}")
            if token != token.lower():
                raise ParseError(f"lexicon key not lowercase: {token!r}")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PolaritySeries:
    """Per-verse scores in corpus order with exact per-chapter sums."""

    translation_id: str
    points: tuple[tuple[VerseRef, int], ...]
    chapter_totals: Mapping[int, int] = field(init=False)

    def __post_init__(self) -> None:
        totals: dict[int, int] = {}
        for ref, score in self.points:
            totals[ref.chapter] = totals.get(ref.chapter, 0) + score
        object.__setattr__(self, "chapter_totals", totals)


def load_lexicon(data: bytes) -> Lexicon:
    """Parse tab-separated word/score lines into a Lexicon.

    Later duplicates override earlier ones; both overrides and skipped
    multiword entries are tallied on the result rather than raised.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"lexicon is not valid UTF-8: {exc}") from None
    entries: dict[str, int] = {}
    skipped = 0
    overridden = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        word, sep, raw_score = line.rpartition("\t")
        if not sep:
            raise ParseError(f"expected word<TAB>score: {line!r}", line=lineno)
        word = word.strip().lower()
        try:
            score = int(raw_score)
        except ValueError:
            raise ParseError(
                f"score is not an integer: {raw_score!r}", line=lineno
            ) from None
        if not (-5 <= score <= 5):
            raise ParseError(f"score outside [-5, 5]: {score}", line=lineno)
        if not word:
            raise ParseError("empty word", line=lineno)
        if any(ch.isspace() for ch in word):
            skipped += 1
            continue
        if word in entries:
            overridden += 1
        entries[word] = score
    return Lexicon(entries=entries, skipped_multiword=skipped, overridden=overridden)


def default_lexicon() -> Lexicon:
    return load_lexicon(
        (resources.files("versant") / "data" / "afinn.txt").read_bytes()
    )


def verse_polarity(tokens: Iterable[str], lexicon: Lexicon) -> int:
    """Sum of scores over tokens found in the lexicon, 0 for the rest."""
    entries = lexicon.entries
    return sum(entries.get(token, 0) for token in tokens)


def polarity_series(
    translation: Translation, config: PreprocessConfig, lexicon: Lexicon
) -> PolaritySeries:
    """Score every verse of a translation under the given preprocessing."""
    points = tuple(
        (tv.ref, verse_polarity(tv.tokens, lexicon))
        for tv in preprocess_translation(translation, config)
    )
    return PolaritySeries(translation_id=translation.id, points=points)
