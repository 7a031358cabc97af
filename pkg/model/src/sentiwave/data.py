"""Training data and corpus ingestion.

The ten-label order here is the interchange contract with the analytics
package and must never change. Training CSVs follow the common layout of
hand-labeled sentiment sets: one text column, one binary column per
label, plus an extra binary column ("official report") that is not a
sentiment and is dropped on load.
"""
from __future__ import annotations

import csv
import io
import random
import re
from dataclasses import dataclass

LABELS = (
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
N_LABELS = len(LABELS)
DROPPED_COLUMN = "official report"


class DataError(ValueError):
    pass


@dataclass(frozen=True)
class TrainingExample:
    text: str
    labels: tuple[int, ...]  # multi-hot, LABELS order

    def __post_init__(self):
        if len(self.labels) != N_LABELS:
            raise DataError(f"expected {N_LABELS} label flags, got {len(self.labels)}")
        if any(flag not in (0, 1) for flag in self.labels):
            raise DataError(f"label flags must be 0/1: {self.labels}")


def load_training_csv(source: str | io.TextIOBase) -> list[TrainingExample]:
    """Read a labeled CSV into examples, dropping the non-sentiment column.

    The header must contain a ``text`` column and all ten label columns;
    column order does not matter. Unknown extra columns other than the
    dropped one are rejected so typos in label names fail loudly.
    """
    fh = open(source, newline="", encoding="utf-8") if isinstance(source, str) else source
    try:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        if "text" not in header:
            raise DataError("missing 'text' column")
        unknown = [
            c for c in header if c not in ("text", DROPPED_COLUMN) and c not in LABELS
        ]
        if unknown:
            raise DataError(f"unknown label columns: {unknown}")
        missing = [c for c in LABELS if c not in header]
        if missing:
            raise DataError(f"missing label columns: {missing}")
        examples = []
        for lineno, row in enumerate(reader, start=2):
            text = (row["text"] or "").strip()
            if not text:
                raise DataError(f"row {lineno}: empty text")
            flags = []
            for name in LABELS:
                raw = (row[name] or "").strip()
                if raw not in ("0", "1"):
                    raise DataError(f"row {lineno}: column {name!r} must be 0 or 1, got {raw!r}")
                flags.append(int(raw))
            examples.append(TrainingExample(text, tuple(flags)))
        if not examples:
            raise DataError("no training rows")
        return examples
    finally:
        if isinstance(source, str):
            fh.close()


def stratified_split(
    examples: list[TrainingExample], val_fraction: float, seed: int
) -> tuple[list[TrainingExample], list[TrainingExample]]:
    """Seeded split keeping each label signature proportionally represented.

    Examples are grouped by their exact label combination, each group is
    shuffled with the seed, and every group contributes its tail to the
    validation side. Groups too small to split stay in training.
    """
    if not 0 < val_fraction < 1:
        raise DataError(f"val_fraction must be in (0, 1), got {val_fraction}")
    groups: dict[tuple[int, ...], list[TrainingExample]] = {}
    for ex in examples:
        groups.setdefault(ex.labels, []).append(ex)
    rng = random.Random(seed)
    train: list[TrainingExample] = []
    val: list[TrainingExample] = []
    for signature in sorted(groups):
        bucket = list(groups[signature])
        rng.shuffle(bucket)
        n_val = int(len(bucket) * val_fraction)
        val.extend(bucket[:n_val])
        train.extend(bucket[n_val:])
    rng.shuffle(train)
    rng.shuffle(val)
    if not train or not val:
        raise DataError(
            f"split produced an empty side ({len(train)} train / {len(val)} val);"
            " dataset too small for this fraction"
        )
    return train, val


_VERSE_LINE = re.compile(r"^(\d+):(\d+)[\t ](.+)$")


def load_verse_lines(source: str) -> list[tuple[int, int, str]]:
    """Read a verse-line corpus file: ``chapter:verse text`` per line.

    Blank lines and ``#`` comments are skipped. Returns rows in file
    order; the raw text is kept untouched since the model consumes
    natural text, not preprocessed tokens.
    """
    rows = []
    with open(source, encoding="utf-8-sig") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            m = _VERSE_LINE.match(line)
            if not m:
                raise DataError(
                    f"line {lineno}: expected 'chapter:verse text', got {line!r}"
                )
            rows.append((int(m.group(1)), int(m.group(2)), m.group(3)))
    if not rows:
        raise DataError("corpus file has no verse lines")
    return rows
