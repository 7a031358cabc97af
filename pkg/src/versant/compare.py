"""Cross-translation analytics: vocabulary overlap and label agreement."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping

from .corpus import ParallelCorpus, Translation, VerseRef
from .errors import ValidationError
from .labels import LabelSet, Prediction
from .polarity import PolaritySeries
from .preprocess import PreprocessConfig, preprocess_translation


def jaccard(a: frozenset | set, b: frozenset | set) -> float:
    """|a & b| / |a | b|, with the empty union counting as full agreement."""
    union = a | b
    if not union:
        return 1.0
    return len(a & b) / len(union)


def vocab_overlap(
    a: Translation,
    b: Translation,
    config: PreprocessConfig = PreprocessConfig(),
    lemma_table: dict[str, str] | None = None,
) -> float:
    """Jaccard similarity of the distinct-token sets of two translations."""
    tokens_a = {t for tv in preprocess_translation(a, config, lemma_table) for t in tv.tokens}
    tokens_b = {t for tv in preprocess_translation(b, config, lemma_table) for t in tv.tokens}
    return jaccard(tokens_a, tokens_b)


@dataclass(frozen=True)
class AgreementRecord:
    ref: VerseRef
    per_translation: Mapping[str, LabelSet]
    intersection: LabelSet
    union: LabelSet
    jaccard: float

    def __post_init__(self) -> None:
        for tid, labels in self.per_translation.items():
            if not (self.intersection.issubset(labels) and labels.issubset(self.union)):
                raise ValueError(
                    f"{self.ref}: set for {tid} violates intersection/union bounds"
                )
        if not 0 <= self.jaccard <= 1:
            raise ValueError(f"jaccard outside [0, 1]: {self.jaccard}")


def label_agreement(
    predictions: Mapping[str, Iterable[Prediction]], corpus: ParallelCorpus
) -> list[AgreementRecord]:
    """Per-verse intersection/union/Jaccard of label sets across translations.

    Every translation in the corpus is expected to predict every verse; a
    missing prediction degrades to the empty set with a warning so partial
    runs stay analyzable. Output follows the corpus verse order.
    """
    known_ids = {t.id for t in corpus.translations}
    by_ref: dict[str, dict[VerseRef, LabelSet]] = {tid: {} for tid in known_ids}
    for tid, preds in predictions.items():
        if tid not in known_ids:
            raise ValidationError(f"predictions for unknown translation {tid!r}")
        refs = corpus[tid].refs()
        for p in preds:
            if p.ref not in refs:
                raise ValidationError(f"prediction for unknown verse {p.ref} in {tid}")
            by_ref[tid][p.ref] = p.labels
    records = []
    empty = LabelSet()
    for verse in corpus.translations[0].verses:
        ref = verse.ref
        per_translation: dict[str, LabelSet] = {}
        for t in corpus.translations:
            labels = by_ref[t.id].get(ref)
            if labels is None:
                warnings.warn(f"no prediction for {t.id} {ref}; treating as empty")
                labels = empty
            per_translation[t.id] = labels
        inter = LabelSet((1 << 10) - 1)
        union = LabelSet()
        for labels in per_translation.values():
            inter = inter & labels
            union = union | labels
        score = 1.0 if not union else len(inter) / len(union)
        records.append(
            AgreementRecord(
                ref=ref,
                per_translation=per_translation,
                intersection=inter,
                union=union,
                jaccard=score,
            )
        )
    return records


def polarity_deviation(series: Iterable[PolaritySeries]) -> dict[int, int]:
    """Per chapter, the widest pairwise gap between chapter totals."""
    series = list(series)
    if len(series) < 2:
        raise ValidationError("need at least two series to compare")
    refs = [tuple(ref for ref, _ in s.points) for s in series]
    if any(r != refs[0] for r in refs[1:]):
        raise ValidationError("series cover different verse sets")
    out: dict[int, int] = {}
    for chapter in dict.fromkeys(ref.chapter for ref in refs[0]):
        totals = [s.chapter_totals[chapter] for s in series]
        out[chapter] = max(totals) - min(totals)
    return out
