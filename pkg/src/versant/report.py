"""Deterministic emission of every analytic as plot-ready CSV/JSON files.

One pipeline run writes exactly eight artifact files plus a manifest that
records input digests, the effective configuration, and a digest of every
output. Identical inputs and configuration produce byte-identical files:
no timestamps, no locale formatting, fixed row orders, atomic writes.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from contextlib import contextmanager
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .compare import label_agreement, polarity_deviation, vocab_overlap
from .corpus import ParallelCorpus, parse_translation, verify_alignment
from .errors import ValidationError, VersantError
from .labels import (
    SentimentLabel,
    Prediction,
    baseline_classify,
    cumulative_counts,
    load_predictions,
    load_seed_lexicons,
)
from .ngrams import extract_ngrams, top_k
from .polarity import Lexicon, PolaritySeries, load_lexicon, verse_polarity
from .preprocess import (
    PreprocessConfig,
    TokenizedVerse,
    load_lemma_table,
    load_stopwords,
    preprocess_translation,
)

ARTIFACTS = (
    "alignment.json",
    "ngrams.csv",
    "polarity.csv",
    "chapter_totals.csv",
    "sentiment_matrix.csv",
    "agreement.csv",
    "overlap.csv",
    "predictions.jsonl",
)
MANIFEST = "manifest.json"

# Bundled fixture corpus, in canonical order.
BUNDLED_CORPUS = {
    "KJV": "kjv.txt",
    "NIV": "niv.txt",
    "NRSV": "nrsv.txt",
    "LV": "lv.txt",
    "BEV": "bev.txt",
}


@dataclass(frozen=True)
class RunConfig:
    """Everything a pipeline run needs; None falls back to bundled data."""

    corpus_paths: Mapping[str, str] | None = None
    lexicon_path: str | None = None
    stopword_path: str | None = None
    lemma_path: str | None = None
    seed_lexicon_path: str | None = None
    prediction_paths: Mapping[str, str] | None = None
    output_dir: str = "out"
    lowercase: bool = True
    remove_stopwords: bool = True
    lemmatize: bool = True
    keep_internal_apostrophes: bool = False
    tau: float = 0.5
    top_k: int = 10


@dataclass(frozen=True)
class ReportBundle:
    output_dir: Path
    files: tuple[str, ...]
    manifest: dict


@contextmanager
def _stage(name: str):
    # Failures surface with the stage that produced them; the error class
    # is preserved so the CLI can still map it to an exit status.
    try:
        yield
    except VersantError as exc:
        raise type(exc)(f"stage {name}: {exc}") from exc


def _bundled(name: str) -> bytes:
    return (resources.files("versant") / "data" / name).read_bytes()


def _read(path: str | None, bundled_name: str) -> bytes:
    if path is None:
        return _bundled(bundled_name)
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


@dataclass
class Workspace:
    """All inputs loaded and validated once, shared by every artifact."""

    config: RunConfig
    preprocess_config: PreprocessConfig
    lemma_table: dict[str, str]
    corpus: ParallelCorpus
    lexicon: Lexicon
    seed_lexicons: dict
    input_digests: dict
    tokenized: dict[str, list[TokenizedVerse]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for t in self.corpus.translations:
            self.tokenized[t.id] = preprocess_translation(
                t, self.preprocess_config, self.lemma_table
            )


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def load_workspace(config: RunConfig) -> Workspace:
    digests: dict = {}
    with _stage("resources"):
        stopword_bytes = _read(config.stopword_path, "stopwords.txt")
        lemma_bytes = _read(config.lemma_path, "lemmas.tsv")
        lexicon_bytes = _read(config.lexicon_path, "afinn.txt")
        seed_bytes = _read(config.seed_lexicon_path, "seed_lexicons.tsv")
        stopword_list = load_stopwords(stopword_bytes.decode("utf-8"))
        lemma_table = load_lemma_table(lemma_bytes.decode("utf-8"))
        lexicon = load_lexicon(lexicon_bytes)
        seeds = load_seed_lexicons(seed_bytes.decode("utf-8"))
        digests["stopwords"] = _digest(stopword_bytes)
        digests["lemmas"] = _digest(lemma_bytes)
        digests["lexicon"] = _digest(lexicon_bytes)
        digests["seed_lexicons"] = _digest(seed_bytes)
    with _stage("corpus"):
        paths = config.corpus_paths
        translations = []
        corpus_digests = {}
        if paths is None:
            for tid, name in BUNDLED_CORPUS.items():
                data = _bundled(f"corpus/{name}")
                translations.append(parse_translation(data, tid))
                corpus_digests[tid] = _digest(data)
        else:
            for tid, path in paths.items():
                data = _read(path, "")
                translations.append(parse_translation(data, tid))
                corpus_digests[tid] = _digest(data)
        digests["corpus"] = corpus_digests
        corpus = ParallelCorpus(tuple(translations))
    pp = PreprocessConfig(
        lowercase=config.lowercase,
        remove_stopwords=config.remove_stopwords,
        lemmatize=config.lemmatize,
        stopword_list=stopword_list,
        keep_internal_apostrophes=config.keep_internal_apostrophes,
    )
    return Workspace(
        config=config,
        preprocess_config=pp,
        lemma_table=lemma_table,
        corpus=corpus,
        lexicon=lexicon,
        seed_lexicons=seeds,
        input_digests=digests,
    )


# ---------------------------------------------------------------------------
# Per-artifact payloads. Each returns plain rows/dicts so the CLI can print
# the same content the pipeline writes.

def alignment_payload(ws: Workspace) -> dict:
    report = verify_alignment(ws.corpus)
    counts = {
        t.id: {str(ch): len(t.chapter_verses(ch)) for ch in t.chapters()}
        for t in ws.corpus.translations
    }
    return {
        "aligned": report.aligned,
        "reference": ws.corpus.translations[0].id,
        "mismatches": [
            {"translation": tid, "ref": str(ref), "kind": kind}
            for tid, ref, kind in report.mismatches
        ],
        "verse_counts": counts,
    }


def ngram_rows(ws: Workspace) -> list[tuple]:
    rows: list[tuple] = []
    for t in ws.corpus.translations:
        for n in (2, 3):
            table = extract_ngrams(ws.tokenized[t.id], n)
            for rank, (gram, count) in enumerate(top_k(table, ws.config.top_k), 1):
                rows.append((t.id, n, rank, " ".join(gram), count))
    return rows


def polarity_series_map(ws: Workspace) -> dict[str, PolaritySeries]:
    out = {}
    for t in ws.corpus.translations:
        points = tuple(
            (tv.ref, verse_polarity(tv.tokens, ws.lexicon))
            for tv in ws.tokenized[t.id]
        )
        out[t.id] = PolaritySeries(translation_id=t.id, points=points)
    return out


def polarity_rows(ws: Workspace) -> list[tuple]:
    rows = []
    for tid, series in polarity_series_map(ws).items():
        for ref, score in series.points:
            rows.append((tid, ref.chapter, ref.verse, score))
    return rows


def chapter_total_rows(ws: Workspace) -> list[tuple]:
    rows = []
    for tid, series in polarity_series_map(ws).items():
        for chapter, total in series.chapter_totals.items():
            rows.append((tid, chapter, total))
    return rows


def compute_predictions(ws: Workspace) -> tuple[list[Prediction], str]:
    """Model predictions when files are configured, else the baseline.

    Returns the predictions in corpus order plus the labels_source flag
    for the manifest: "model", "baseline", or "mixed".
    """
    loaded: dict[str, dict] = {}
    paths = ws.config.prediction_paths or {}
    for tid, path in paths.items():
        data = _read(path, "")
        ws.input_digests.setdefault("predictions", {})[tid] = _digest(data)
        for p in load_predictions(data, ws.corpus):
            loaded.setdefault(p.translation_id, {})[p.ref] = p
    predictions: list[Prediction] = []
    covered = 0
    for t in ws.corpus.translations:
        have = loaded.get(t.id, {})
        if have:
            covered += 1
        for tv in ws.tokenized[t.id]:
            p = have.get(tv.ref)
            if p is None:
                labels = baseline_classify(tv, ws.seed_lexicons)
                scores = tuple(
                    1.0 if label in labels else 0.0 for label in SentimentLabel
                )
                p = Prediction(
                    translation_id=t.id,
                    ref=tv.ref,
                    scores=scores,
                    labels=labels,
                    tau=ws.config.tau,
                )
            predictions.append(p)
    total = len(ws.corpus.translations)
    source = "model" if covered == total else "baseline" if covered == 0 else "mixed"
    return predictions, source


def matrix_rows(ws: Workspace, predictions: list[Prediction]) -> list[tuple]:
    scopes: list[int | str] = ["all"]
    scopes.extend(ws.corpus.translations[0].chapters())
    order = [t.id for t in ws.corpus.translations]
    rows = []
    for scope in scopes:
        matrix = cumulative_counts(predictions, scope)
        for tid in order:
            for label in SentimentLabel:
                rows.append((scope, tid, label.name, matrix.cell(tid, label)))
    return rows


def agreement_rows(ws: Workspace, predictions: list[Prediction]) -> list[tuple]:
    per_translation: dict[str, list[Prediction]] = {}
    for p in predictions:
        per_translation.setdefault(p.translation_id, []).append(p)
    rows = []
    for record in label_agreement(per_translation, ws.corpus):
        rows.append(
            (
                record.ref.chapter,
                record.ref.verse,
                "|".join(record.intersection.names()),
                "|".join(record.union.names()),
                repr(record.jaccard),
            )
        )
    return rows


def overlap_rows(ws: Workspace) -> list[tuple]:
    ts = ws.corpus.translations
    rows = []
    for i, a in enumerate(ts):
        for b in ts[i + 1 :]:
            score = vocab_overlap(a, b, ws.preprocess_config, ws.lemma_table)
            rows.append((a.id, b.id, repr(score)))
    return rows


def deviation_rows(ws: Workspace) -> list[tuple]:
    deviations = polarity_deviation(polarity_series_map(ws).values())
    return [(chapter, gap) for chapter, gap in deviations.items()]


def emit_predictions(predictions: Iterable[Prediction]) -> bytes:
    """Serialize to the line-delimited interchange format, canonical order."""
    ordered = sorted(
        predictions, key=lambda p: (p.translation_id, p.ref.chapter, p.ref.verse)
    )
    lines = []
    for p in ordered:
        record: dict = {
            "translation": p.translation_id,
            "chapter": p.ref.chapter,
            "verse": p.ref.verse,
            "scores": list(p.scores),
            "labels": p.labels.names(),
        }
        if p.tau is not None:
            record["tau"] = p.tau
        lines.append(json.dumps(record, ensure_ascii=False))
    return "".join(line + "\n" for line in lines).encode("utf-8")


# ---------------------------------------------------------------------------
# File emission.

def _csv_bytes(header: tuple[str, ...], rows: Iterable[tuple]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _json_bytes(payload: dict) -> bytes:
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode("utf-8")


def _write_atomic(path: Path, data: bytes) -> str:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)
    return _digest(data)


def run_pipeline(config: RunConfig) -> ReportBundle:
    ws = load_workspace(config)
    with _stage("alignment"):
        alignment = alignment_payload(ws)
    with _stage("ngrams"):
        ngrams = ngram_rows(ws)
    with _stage("polarity"):
        pol_rows = polarity_rows(ws)
        totals = chapter_total_rows(ws)
    with _stage("predictions"):
        predictions, labels_source = compute_predictions(ws)
    with _stage("matrices"):
        matrices = matrix_rows(ws, predictions)
    with _stage("agreement"):
        agreements = agreement_rows(ws, predictions)
    with _stage("overlap"):
        overlaps = overlap_rows(ws)
    with _stage("emit"):
        out_dir = Path(config.output_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        payloads: dict[str, bytes] = {
            "alignment.json": _json_bytes(alignment),
            "ngrams.csv": _csv_bytes(
                ("translation", "n", "rank", "gram", "count"), ngrams
            ),
            "polarity.csv": _csv_bytes(
                ("translation", "chapter", "verse", "score"), pol_rows
            ),
            "chapter_totals.csv": _csv_bytes(
                ("translation", "chapter", "total"), totals
            ),
            "sentiment_matrix.csv": _csv_bytes(
                ("scope", "translation", "label", "count"), matrices
            ),
            "agreement.csv": _csv_bytes(
                ("chapter", "verse", "intersection", "union", "jaccard"), agreements
            ),
            "overlap.csv": _csv_bytes(("a", "b", "jaccard"), overlaps),
            "predictions.jsonl": emit_predictions(predictions),
        }
        output_digests = {
            name: _write_atomic(out_dir / name, payloads[name]) for name in ARTIFACTS
        }
        effective = {
            "translations": [t.id for t in ws.corpus.translations],
            "lowercase": config.lowercase,
            "remove_stopwords": config.remove_stopwords,
            "lemmatize": config.lemmatize,
            "keep_internal_apostrophes": config.keep_internal_apostrophes,
            "tau": config.tau,
            "top_k": config.top_k,
            "labels_source": labels_source,
        }
        config_digest = _digest(
            json.dumps(
                {"config": effective, "inputs": ws.input_digests}, sort_keys=True
            ).encode("utf-8")
        )
        manifest = {
            "config": effective,
            "config_digest": config_digest,
            "inputs": ws.input_digests,
            "outputs": output_digests,
        }
        _write_atomic(out_dir / MANIFEST, _json_bytes(manifest))
    return ReportBundle(
        output_dir=out_dir, files=ARTIFACTS + (MANIFEST,), manifest=manifest
    )
