"""Deterministic text normalization: NFC, punctuation splitting, stopwords, lemmas.

The whole pipeline is pure and table-driven so that identical input and
configuration always produce identical tokens, with no dependency on
external NLP packages.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .corpus import Verse, VerseRef
from .errors import ParseError

_WS = re.compile(r"\s+")
_WORD = re.compile(r"[^\W_]+", re.UNICODE)
_WORD_APOS = re.compile(r"[^\W_]+(?:['’][^\W_]+)*", re.UNICODE)

_VOWELS = "aeiou"


def _data_text(name: str) -> str:
    return (resources.files("versant") / "data" / name).read_text(encoding="utf-8")


def load_stopwords(text: str) -> frozenset[str]:
    """Parse a stopword file: one word per line, '#' comments, blanks skipped."""
    words = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        if any(c.isspace() for c in word):
            raise ParseError(f"stopword contains whitespace: {word!r}", lineno)
        words.add(word.lower())
    return frozenset(words)


def load_lemma_table(text: str) -> dict[str, str]:
    """Parse a lemma table file: ``inflected<TAB>lemma`` per line, '#' comments."""
    table: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ParseError(f"expected 'inflected<TAB>lemma', got {line!r}", lineno)
        table[parts[0].strip().lower()] = parts[1].strip().lower()
    return table


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    return load_stopwords(_data_text("stopwords.txt"))


@lru_cache(maxsize=1)
def default_lemma_table() -> dict[str, str]:
    return load_lemma_table(_data_text("lemmas.tsv"))


@dataclass(frozen=True)
class PreprocessConfig:
    lowercase: bool = True
    remove_stopwords: bool = True
    lemmatize: bool = True
    stopword_list: frozenset[str] = field(default_factory=default_stopwords)
    keep_internal_apostrophes: bool = False

    def __post_init__(self):
        for word in self.stopword_list:
            if word != word.lower() or any(c.isspace() for c in word):
                raise ValueError(f"bad stopword entry {word!r}")


@dataclass(frozen=True)
class TokenizedVerse:
    ref: VerseRef
    tokens: tuple[str, ...]


def normalize(text: str) -> str:
    """NFC-compose and collapse all whitespace runs to single spaces."""
    return _WS.sub(" ", unicodedata.normalize("NFC", text)).strip()


def tokenize(text: str, config: PreprocessConfig = PreprocessConfig()) -> list[str]:
    """Split into maximal runs of letters/digits; punctuation delimits.

    With keep_internal_apostrophes, an apostrophe flanked by word characters
    stays inside its token ("don't"); otherwise it splits like any other
    punctuation ("don", "t").
    """
    if config.lowercase:
        text = text.lower()
    pattern = _WORD_APOS if config.keep_internal_apostrophes else _WORD
    return pattern.findall(text)


def remove_stopwords(tokens: list[str], config: PreprocessConfig) -> list[str]:
    return [t for t in tokens if t not in config.stopword_list]


def _fix_stem(stem: str) -> str:
    # Undoubled consonant (sitt -> sit) and restored silent e (judg -> judge)
    # are exclusive: a stem that undoubles never takes an e.
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS
        and stem[-1] not in "lsz"
    ):
        return stem[:-1]
    if stem.endswith("dg"):
        return stem + "e"
    if stem[-1] in "vcu" or (stem[-1] == "s" and not stem.endswith("ss")):
        return stem + "e"
    if (
        len(stem) <= 4
        and len(stem) >= 3
        and stem[-1] not in _VOWELS
        and stem[-1] not in "wxy"
        and stem[-2] in _VOWELS
        and stem[-3] not in _VOWELS
    ):
        return stem + "e"
    return stem


def _lemma_step(token: str, table: dict[str, str]) -> str:
    if token in table:
        return table[token]
    n = len(token)
    if token.endswith("ies") and n > 4:
        return token[:-3] + "y"
    if token.endswith("sses"):
        return token[:-2]
    if token.endswith(("ches", "shes", "xes", "zes")) and n > 4:
        return token[:-2]
    if token.endswith("s") and not token.endswith(("ss", "us", "is")) and n > 3:
        return token[:-1]
    if token.endswith("ing") and n > 5:
        return _fix_stem(token[:-3])
    if token.endswith("ied") and n > 4:
        return token[:-3] + "y"
    if token.endswith("eed"):
        return token
    if token.endswith("ed") and n > 4:
        return _fix_stem(token[:-2])
    return token


def lemmatize(
    tokens: list[str],
    table: dict[str, str] | None = None,
    protect: frozenset[str] = frozenset(),
) -> list[str]:
    """Map each token to its base form; unknown forms pass through.

    Each token is rewritten until it stops changing, so stacked suffixes
    reduce fully ("blessings" -> "blessing" -> "bless") and the operation
    is idempotent. A token whose base form lands in ``protect`` keeps its
    surface form instead, so lemmatization never reintroduces a form the
    caller has already filtered out.
    """
    if table is None:
        table = default_lemma_table()
    out = []
    for token in tokens:
        reduced = token
        for _ in range(6):
            step = _lemma_step(reduced, table)
            if step == reduced:
                break
            reduced = step
        out.append(token if reduced in protect else reduced)
    return out


def preprocess_verse(
    verse: Verse,
    config: PreprocessConfig = PreprocessConfig(),
    lemma_table: dict[str, str] | None = None,
) -> TokenizedVerse:
    """normalize -> tokenize -> remove_stopwords -> lemmatize, per config flags."""
    tokens = tokenize(normalize(verse.raw_text), config)
    if config.remove_stopwords:
        tokens = remove_stopwords(tokens, config)
    if config.lemmatize:
        # never lemmatize into a form the stopword stage just removed,
        # or reprocessing the output would not be a fixed point
        protect = config.stopword_list if config.remove_stopwords else frozenset()
        tokens = lemmatize(tokens, lemma_table, protect)
    return TokenizedVerse(ref=verse.ref, tokens=tuple(tokens))


def preprocess_translation(
    translation,
    config: PreprocessConfig = PreprocessConfig(),
    lemma_table: dict[str, str] | None = None,
) -> list[TokenizedVerse]:
    return [preprocess_verse(v, config, lemma_table) for v in translation.verses]
