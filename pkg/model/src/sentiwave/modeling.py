"""Training and inference for the ten-label sigmoid head.

The classifier is a single linear layer over sentence features with one
sigmoid output per label, trained with binary cross-entropy. Metrics and
two same-seed runs are bit-identical: seeding covers the split, the
weight init, and the batch order, and everything runs single-threaded on
CPU.
"""
from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import torch
from torch import nn

from .data import LABELS, N_LABELS, TrainingExample, stratified_split
from .encoder import make_encoder


@dataclass(frozen=True)
class TrainConfig:
    encoder: str = "hashed"
    seed: int = 7
    epochs: int = 60
    lr: float = 0.05
    batch_size: int = 32
    val_fraction: float = 0.2
    tau: float = 0.5

    def digest(self) -> str:
        payload = json.dumps(self.__dict__, sort_keys=True).encode()
        return hashlib.sha256(payload).hexdigest()


@dataclass
class Metrics:
    per_label_f1: dict[str, float]
    micro_f1: float
    macro_f1: float
    baseline_micro_f1: float
    n_train: int
    n_val: int

    def as_dict(self) -> dict:
        return {
            "per_label_f1": self.per_label_f1,
            "micro_f1": self.micro_f1,
            "macro_f1": self.macro_f1,
            "baseline_micro_f1": self.baseline_micro_f1,
            "n_train": self.n_train,
            "n_val": self.n_val,
        }


def f1_scores(
    truth: Sequence[Sequence[int]], predicted: Sequence[Sequence[int]]
) -> tuple[dict[str, float], float, float]:
    """Per-label, micro, and macro F1 over multi-hot rows.

    A label with no positives and no predictions scores 1 by convention
    so an absent label does not drag the macro average down.
    """
    if len(truth) != len(predicted):
        raise ValueError("truth and prediction row counts differ")
    tp = [0] * N_LABELS
    fp = [0] * N_LABELS
    fn = [0] * N_LABELS
    for t_row, p_row in zip(truth, predicted):
        for i in range(N_LABELS):
            if p_row[i] and t_row[i]:
                tp[i] += 1
            elif p_row[i]:
                fp[i] += 1
            elif t_row[i]:
                fn[i] += 1
    per_label = {}
    for i, name in enumerate(LABELS):
        denom = 2 * tp[i] + fp[i] + fn[i]
        per_label[name] = 1.0 if denom == 0 else 2 * tp[i] / denom
    micro_den = 2 * sum(tp) + sum(fp) + sum(fn)
    micro = 1.0 if micro_den == 0 else 2 * sum(tp) / micro_den
    macro = sum(per_label.values()) / N_LABELS
    return per_label, micro, macro


def _multi_hot(examples: Sequence[TrainingExample]) -> torch.Tensor:
    return torch.tensor([ex.labels for ex in examples], dtype=torch.float32)


def train(dataset: list[TrainingExample], config: TrainConfig = TrainConfig()):
    """Fit the head on a seeded split; returns (artifact dict, Metrics)."""
    if not dataset:
        raise ValueError("dataset is empty")
    torch.manual_seed(config.seed)
    torch.set_num_threads(1)

    train_ex, val_ex = stratified_split(dataset, config.val_fraction, config.seed)
    encoder = make_encoder(config.encoder)
    x_train = encoder.encode([ex.text for ex in train_ex])
    y_train = _multi_hot(train_ex)
    x_val = encoder.encode([ex.text for ex in val_ex])
    y_val = _multi_hot(val_ex)

    head = nn.Linear(encoder.dim, N_LABELS)
    optimizer = torch.optim.Adam(head.parameters(), lr=config.lr)
    loss_fn = nn.BCEWithLogitsLoss()
    generator = torch.Generator().manual_seed(config.seed)
    for _ in range(config.epochs):
        order = torch.randperm(len(train_ex), generator=generator)
        for start in range(0, len(order), config.batch_size):
            idx = order[start : start + config.batch_size]
            optimizer.zero_grad()
            loss = loss_fn(head(x_train[idx]), y_train[idx])
            loss.backward()
            optimizer.step()

    head.eval()
    with torch.no_grad():
        val_scores = torch.sigmoid(head(x_val))
    val_pred = (val_scores >= config.tau).int().tolist()
    val_truth = y_val.int().tolist()
    per_label, micro, macro = f1_scores(val_truth, val_pred)
    # the do-nothing reference point, computed with the same metric code
    _, baseline_micro, _ = f1_scores(val_truth, [[0] * N_LABELS for _ in val_truth])

    metrics = Metrics(
        per_label_f1=per_label,
        micro_f1=micro,
        macro_f1=macro,
        baseline_micro_f1=baseline_micro,
        n_train=len(train_ex),
        n_val=len(val_ex),
    )
    artifact = {
        "format": "sentiwave-artifact-v1",
        "meta": {
            "encoder": encoder.id,
            "labels": list(LABELS),
            "tau": config.tau,
            "config_digest": config.digest(),
            "metrics": metrics.as_dict(),
        },
        "state": head.state_dict(),
        "dim": encoder.dim,
    }
    return artifact, metrics


def save_artifact(artifact: dict, path: str) -> None:
    torch.save(artifact, path)


def load_artifact(path: str) -> dict:
    artifact = torch.load(path, map_location="cpu", weights_only=False)
    if not isinstance(artifact, dict) or artifact.get("format") != "sentiwave-artifact-v1":
        raise ValueError(f"{path} is not a model artifact")
    if artifact["meta"]["labels"] != list(LABELS):
        raise ValueError("artifact label order does not match this package")
    return artifact


def predict(
    artifact: dict, verses: list[tuple[int, int, str]], translation_id: str
) -> list[dict]:
    """Score verses and emit interchange records in input order.

    Empty or whitespace-only text yields an all-zero record with a
    warning instead of failing the batch.
    """
    encoder_id = artifact["meta"]["encoder"]
    # a transformer encoder can only be rebuilt if its weights are present
    encoder = make_encoder(encoder_id)
    if encoder.id != encoder_id:
        raise ValueError(
            f"artifact was built with encoder {encoder_id!r}, got {encoder.id!r}"
        )
    head = nn.Linear(artifact["dim"], N_LABELS)
    head.load_state_dict(artifact["state"])
    head.eval()
    tau = float(artifact["meta"]["tau"])

    texts = []
    blank = []
    for chapter, verse, text in verses:
        if not text.strip():
            warnings.warn(f"verse {chapter}:{verse} has empty text; scoring as zeros")
            blank.append(True)
            texts.append("")
        else:
            blank.append(False)
            texts.append(text)

    with torch.no_grad():
        scores = torch.sigmoid(head(encoder.encode(texts)))
    records = []
    for i, (chapter, verse, _) in enumerate(verses):
        row = [0.0] * N_LABELS if blank[i] else [float(s) for s in scores[i]]
        row = [min(1.0, max(0.0, s)) for s in row]
        names = [LABELS[j] for j, s in enumerate(row) if s >= tau]
        records.append(
            {
                "translation": translation_id,
                "chapter": chapter,
                "verse": verse,
                "scores": row,
                "labels": names,
                "tau": tau,
            }
        )
    return records


def emit_records(records: list[dict]) -> str:
    ordered = sorted(records, key=lambda r: (r["translation"], r["chapter"], r["verse"]))
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in ordered)
