import json

import pytest

from versant.corpus import ParallelCorpus, Translation, Verse, VerseRef
from versant.errors import DomainError, ParseError, ValidationError
from versant.labels import (
    LABEL_NAMES,
    LabelSet,
    Prediction,
    SentimentLabel,
    baseline_classify,
    cumulative_counts,
    default_seed_lexicons,
    load_predictions,
    load_seed_lexicons,
    threshold,
)
from versant.preprocess import TokenizedVerse


def test_label_order_is_frozen():
    assert LABEL_NAMES == (
        "optimistic",
        "thankful",
        "empathetic",
        "pessimistic",
        "anxious",
        "sad",
        "annoyed",
        "denial",
        "surprise",
        "joking",
    )
    assert [int(l) for l in SentimentLabel] == list(range(10))


def test_labelset_ops():
    s = LabelSet.of(SentimentLabel.annoyed, SentimentLabel.joking)
    assert SentimentLabel.annoyed in s
    assert SentimentLabel.sad not in s
    assert len(s) == 2
    assert s.names() == ["annoyed", "joking"]
    assert LabelSet.from_names(["joking"]).issubset(s)
    assert (s & LabelSet.from_names(["joking"])).names() == ["joking"]
    assert (LabelSet() | s) == s
    with pytest.raises(ValueError):
        LabelSet(1 << 10)
    with pytest.raises(KeyError):
        LabelSet.from_names(["cheerful"])


def test_threshold_examples():
    assert threshold([0.0] * 10) == LabelSet()
    scores = [0.0] * 10
    scores[9] = 0.5
    assert threshold(scores, 0.5) == LabelSet.of(SentimentLabel.joking)
    scores = [0.0] * 10
    scores[3], scores[4] = 0.7, 0.6
    assert threshold(scores) == LabelSet.of(
        SentimentLabel.pessimistic, SentimentLabel.anxious
    )


def test_threshold_validation():
    with pytest.raises(DomainError):
        threshold([1.5] + [0.0] * 9)
    with pytest.raises(DomainError):
        threshold([0.0] * 9)
    with pytest.raises(DomainError):
        threshold([0.0] * 10, tau=0.0)
    with pytest.raises(DomainError):
        threshold([0.0] * 10, tau=1.0)


def _record(**overrides):
    record = {
        "translation": "KJV",
        "chapter": 7,
        "verse": 5,
        "scores": [0.0] * 6 + [0.9, 0.0, 0.0, 0.8],
        "labels": ["annoyed", "joking"],
    }
    record.update(overrides)
    return json.dumps(record)


def test_load_predictions_happy_path():
    preds = load_predictions(_record() + "\n")
    assert len(preds) == 1
    p = preds[0]
    assert p.translation_id == "KJV"
    assert p.ref == VerseRef(7, 5)
    assert p.labels == LabelSet.from_names(["annoyed", "joking"])
    assert p.tau is None


def test_load_predictions_empty_input():
    assert load_predictions("") == []
    assert load_predictions(b"\n\n") == []


def test_load_predictions_error_carries_record_index():
    data = _record() + "\n" + _record(scores=[0.0] * 9) + "\n"
    with pytest.raises(ValidationError) as exc:
        load_predictions(data)
    assert "record 2" in str(exc.value)


def test_load_predictions_rejects_unknown_label():
    with pytest.raises(ValidationError) as exc:
        load_predictions(_record(labels=["upbeat"]))
    assert "upbeat" in str(exc.value)


def test_load_predictions_rejects_bad_scores():
    with pytest.raises(ValidationError):
        load_predictions(_record(scores=[2.0] + [0.0] * 9))
    with pytest.raises(ValidationError):
        load_predictions(_record(scores=[True] + [0.0] * 9))


def test_load_predictions_tau_consistency():
    good = _record(tau=0.5, scores=[0.0] * 6 + [0.9, 0.0, 0.0, 0.8])
    assert load_predictions(good)[0].tau == 0.5
    bad = _record(tau=0.95, scores=[0.0] * 6 + [0.9, 0.0, 0.0, 0.8])
    with pytest.raises(ValidationError) as exc:
        load_predictions(bad)
    assert "inconsistent" in str(exc.value)


def _corpus():
    verses = (Verse(VerseRef(7, 5), "text."),)
    return ParallelCorpus((Translation("KJV", verses),))


def test_load_predictions_validates_against_corpus():
    assert load_predictions(_record(), _corpus())[0].ref == VerseRef(7, 5)
    with pytest.raises(ValidationError):
        load_predictions(_record(verse=6), _corpus())
    with pytest.raises(ValidationError):
        load_predictions(_record(translation="NIV"), _corpus())


def _pred(tid, chapter, verse, *names):
    labels = LabelSet.from_names(names)
    scores = tuple(1.0 if l in labels else 0.0 for l in SentimentLabel)
    return Prediction(tid, VerseRef(chapter, verse), scores, labels)


def test_prediction_tau_invariant():
    labels = LabelSet.from_names(["joking"])
    scores = tuple(1.0 if l in labels else 0.0 for l in SentimentLabel)
    Prediction("T", VerseRef(5, 1), scores, labels, tau=0.5)
    with pytest.raises(ValueError):
        Prediction("T", VerseRef(5, 1), scores, LabelSet(), tau=0.5)


def test_cumulative_counts_single():
    matrix = cumulative_counts([_pred("KJV", 7, 5, "annoyed", "joking")])
    assert matrix.cell("KJV", SentimentLabel.annoyed) == 1
    assert matrix.cell("KJV", SentimentLabel.joking) == 1
    assert matrix.cell("KJV", SentimentLabel.sad) == 0
    assert matrix.column_total(SentimentLabel.annoyed) == 1


def test_cumulative_counts_scope_and_additivity():
    preds = [
        _pred("A", 5, 1, "sad"),
        _pred("A", 6, 1, "sad", "annoyed"),
        _pred("B", 5, 1, "sad"),
    ]
    full = cumulative_counts(preds, "all")
    ch5 = cumulative_counts(preds, 5)
    ch6 = cumulative_counts(preds, 6)
    assert full.cell("A", SentimentLabel.sad) == 2
    assert ch5.cell("A", SentimentLabel.sad) == 1
    assert ch6.cell("A", SentimentLabel.annoyed) == 1
    assert ch6.cell("B", SentimentLabel.sad) == 0
    for label in SentimentLabel:
        for tid in ("A", "B"):
            assert full.cell(tid, label) == ch5.cell(tid, label) + ch6.cell(tid, label)


def test_cumulative_counts_last_record_wins_per_verse():
    preds = [_pred("A", 5, 1, "sad"), _pred("A", 5, 1, "joking")]
    matrix = cumulative_counts(preds)
    assert matrix.cell("A", SentimentLabel.sad) == 0
    assert matrix.cell("A", SentimentLabel.joking) == 1


def test_seed_lexicon_loader():
    seeds = load_seed_lexicons("annoyed\thypocrite\njoking\tjest\n")
    assert "hypocrite" in seeds[SentimentLabel.annoyed]
    assert seeds[SentimentLabel.sad] == frozenset()
    with pytest.raises(ParseError):
        load_seed_lexicons("nosuchlabel\tword\n")
    with pytest.raises(ParseError):
        load_seed_lexicons("annoyed hypocrite\n")


def test_baseline_classify():
    seeds = load_seed_lexicons("annoyed\thypocrite\nsad\tmourn\n")
    verse = TokenizedVerse(VerseRef(7, 5), ("hypocrite", "speck"))
    assert baseline_classify(verse, seeds) == LabelSet.of(SentimentLabel.annoyed)
    empty = TokenizedVerse(VerseRef(7, 6), ())
    assert baseline_classify(empty, seeds) == LabelSet()
    both = TokenizedVerse(VerseRef(5, 4), ("mourn", "hypocrite"))
    assert baseline_classify(both, seeds).names() == ["sad", "annoyed"]


def test_default_seed_lexicons_cover_every_label():
    seeds = default_seed_lexicons()
    assert set(seeds) == set(SentimentLabel)
    assert all(seeds[label] for label in SentimentLabel)
