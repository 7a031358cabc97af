"""Ten-way multi-label sentiment: types, thresholding, ingest, aggregation.

The label inventory and its index order are frozen; scores travel as ten
reals in [0, 1] in that order, and sets of assigned labels are a 10-bit
mask. A small seed-lexicon baseline lets the analytics run end to end
without any trained model; it makes no accuracy claim.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Iterator, Mapping

from .corpus import ParallelCorpus, VerseRef
from .errors import DomainError, ParseError, ValidationError
from .preprocess import TokenizedVerse


class SentimentLabel(enum.IntEnum):
    optimistic = 0
    thankful = 1
    empathetic = 2
    pessimistic = 3
    anxious = 4
    sad = 5
    annoyed = 6
    denial = 7
    surprise = 8
    joking = 9


LABEL_NAMES: tuple[str, ...] = tuple(label.name for label in SentimentLabel)
_BY_NAME: Mapping[str, SentimentLabel] = {l.name: l for l in SentimentLabel}
N_LABELS = len(SentimentLabel)


@dataclass(frozen=True)
class LabelSet:
    """Immutable subset of the ten labels, stored as a bit mask."""

    mask: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.mask < 1 << N_LABELS:
            raise ValueError(f"mask out of range: {self.mask}")

    @classmethod
    def of(cls, *labels: SentimentLabel) -> LabelSet:
        return cls.from_labels(labels)

    @classmethod
    def from_labels(cls, labels: Iterable[SentimentLabel]) -> LabelSet:
        mask = 0
        for label in labels:
            mask |= 1 << SentimentLabel(label)
        return cls(mask)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> LabelSet:
        """Build from serialized names; unknown names raise KeyError."""
        return cls.from_labels(_BY_NAME[name] for name in names)

    def __contains__(self, label: SentimentLabel) -> bool:
        return bool(self.mask >> label & 1)

    def __iter__(self) -> Iterator[SentimentLabel]:
        return (l for l in SentimentLabel if l in self)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __or__(self, other: LabelSet) -> LabelSet:
        return LabelSet(self.mask | other.mask)

    def __and__(self, other: LabelSet) -> LabelSet:
        return LabelSet(self.mask & other.mask)

    def issubset(self, other: LabelSet) -> bool:
        return self.mask & other.mask == self.mask

    def names(self) -> list[str]:
        return [label.name for label in self]


def threshold(scores: Iterable[float], tau: float = 0.5) -> LabelSet:
    """Labels whose score meets tau. Boundary score == tau is included."""
    if not 0 < tau < 1:
        raise DomainError(f"tau must lie strictly inside (0, 1), got {tau}")
    values = tuple(scores)
    if len(values) != N_LABELS:
        raise DomainError(f"expected {N_LABELS} scores, got {len(values)}")
    mask = 0
    for i, score in enumerate(values):
        if not 0 <= score <= 1:
            raise DomainError(f"score[{i}] outside [0, 1]: {score}")
        if score >= tau:
            mask |= 1 << i
    return LabelSet(mask)


@dataclass(frozen=True)
class Prediction:
    translation_id: str
    ref: VerseRef
    scores: tuple[float, ...]
    labels: LabelSet
    tau: float | None = None

    def __post_init__(self) -> None:
        if len(self.scores) != N_LABELS:
            raise ValueError(f"expected {N_LABELS} scores, got {len(self.scores)}")
        for i, score in enumerate(self.scores):
            if not 0 <= score <= 1:
                raise ValueError(f"score[{i}] outside [0, 1]: {score}")
        # With a recorded tau the label set is not free-standing data.
        if self.tau is not None and self.labels != threshold(self.scores, self.tau):
            raise ValueError(
                f"labels inconsistent with scores at tau={self.tau} for {self.ref}"
            )


def _record_error(index: int, message: str) -> ValidationError:
    return ValidationError(f"record {index}: {message}")


def load_predictions(
    data: bytes | str, corpus: ParallelCorpus | None = None
) -> list[Prediction]:
    """Parse line-delimited JSON prediction records.

    Each line carries translation, chapter, verse, scores (ten reals in
    label-index order), labels (serialized names), and optionally tau.
    When a corpus is supplied, translation ids and refs must exist in it.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValidationError(f"predictions are not valid UTF-8: {exc}") from None
    out: list[Prediction] = []
    index = 0
    for line in data.splitlines():
        if not line.strip():
            continue
        index += 1
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise _record_error(index, f"bad JSON: {exc}") from None
        if not isinstance(record, dict):
            raise _record_error(index, "record is not an object")
        try:
            translation = record["translation"]
            chapter = record["chapter"]
            verse = record["verse"]
            scores = record["scores"]
            names = record["labels"]
        except KeyError as exc:
            raise _record_error(index, f"missing field {exc.args[0]!r}") from None
        tau = record.get("tau")
        if not isinstance(translation, str):
            raise _record_error(index, "translation must be a string")
        if not isinstance(chapter, int) or not isinstance(verse, int) or isinstance(
            chapter, bool
        ) or isinstance(verse, bool):
            raise _record_error(index, "chapter and verse must be integers")
        if not isinstance(scores, list) or len(scores) != N_LABELS:
            raise _record_error(index, f"scores must be an array of {N_LABELS} reals")
        for i, s in enumerate(scores):
            if isinstance(s, bool) or not isinstance(s, (int, float)):
                raise _record_error(index, f"score[{i}] is not a number")
            if not 0 <= s <= 1:
                raise _record_error(index, f"score[{i}] outside [0, 1]: {s}")
        if not isinstance(names, list):
            raise _record_error(index, "labels must be an array of names")
        try:
            labels = LabelSet.from_names(names)
        except KeyError as exc:
            raise _record_error(index, f"unknown label name {exc.args[0]!r}") from None
        if tau is not None:
            if isinstance(tau, bool) or not isinstance(tau, (int, float)):
                raise _record_error(index, "tau is not a number")
            if labels != threshold(scores, tau):
                raise _record_error(
                    index, f"labels inconsistent with scores at tau={tau}"
                )
        try:
            ref = VerseRef(chapter, verse)
        except ValueError as exc:
            raise _record_error(index, str(exc)) from None
        if corpus is not None:
            try:
                known = corpus[translation].refs()
            except Exception:
                raise _record_error(
                    index, f"unknown translation {translation!r}"
                ) from None
            if ref not in known:
                raise _record_error(index, f"unknown verse {ref} in {translation}")
        out.append(
            Prediction(
                translation_id=translation,
                ref=ref,
                scores=tuple(float(s) for s in scores),
                labels=labels,
                tau=None if tau is None else float(tau),
            )
        )
    return out


@dataclass(frozen=True)
class SentimentMatrix:
    """Verse counts per (translation, label), restricted to a scope.

    scope is a chapter number or the string "all".
    """

    scope: int | str
    translations: tuple[str, ...]
    counts: Mapping[tuple[str, SentimentLabel], int]

    def __post_init__(self) -> None:
        if isinstance(self.scope, str) and self.scope != "all":
            raise ValueError(f'scope must be a chapter number or "all": {self.scope}')
        for key, count in self.counts.items():
            if count < 0:
                raise ValueError(f"negative cell {key}: {count}")

    def cell(self, translation_id: str, label: SentimentLabel) -> int:
        return self.counts.get((translation_id, label), 0)

    def column_total(self, label: SentimentLabel) -> int:
        return sum(self.cell(t, label) for t in self.translations)


def cumulative_counts(
    predictions: Iterable[Prediction], scope: int | str = "all"
) -> SentimentMatrix:
    """Count, per translation and label, the verses carrying that label.

    Each verse contributes at most one per label; if the input holds
    several records for one verse the last record wins.
    """
    by_verse: dict[tuple[str, VerseRef], LabelSet] = {}
    order: list[str] = []
    for p in predictions:
        if scope != "all" and p.ref.chapter != scope:
            continue
        if p.translation_id not in order:
            order.append(p.translation_id)
        by_verse[(p.translation_id, p.ref)] = p.labels
    counts: dict[tuple[str, SentimentLabel], int] = {}
    for (tid, _), labels in by_verse.items():
        for label in labels:
            key = (tid, label)
            counts[key] = counts.get(key, 0) + 1
    return SentimentMatrix(scope=scope, translations=tuple(order), counts=counts)


def load_seed_lexicons(text: str) -> dict[SentimentLabel, frozenset[str]]:
    """Parse label<TAB>token lines into per-label token sets."""
    sets: dict[SentimentLabel, set[str]] = {label: set() for label in SentimentLabel}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        name, sep, token = line.partition("\t")
        if not sep or not token.strip():
            raise ParseError(f"expected label<TAB>token: {line!r}", line=lineno)
        label = _BY_NAME.get(name.strip())
        if label is None:
            raise ParseError(f"unknown label name {name.strip()!r}", line=lineno)
        sets[label].add(token.strip().lower())
    return {label: frozenset(tokens) for label, tokens in sets.items()}


@lru_cache(maxsize=1)
def default_seed_lexicons() -> dict[SentimentLabel, frozenset[str]]:
    text = (resources.files("versant") / "data" / "seed_lexicons.tsv").read_text(
        "utf-8"
    )
    return load_seed_lexicons(text)


def baseline_classify(
    verse: TokenizedVerse,
    seed_lexicons: Mapping[SentimentLabel, frozenset[str]] | None = None,
) -> LabelSet:
    """Assign every label whose seed set intersects the verse tokens."""
    if seed_lexicons is None:
        seed_lexicons = default_seed_lexicons()
    tokens = set(verse.tokens)
    return LabelSet.from_labels(
        label for label, seeds in seed_lexicons.items() if tokens & seeds
    )
