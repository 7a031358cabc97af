"""Trainable multi-label sentiment sidecar.

Fits a sigmoid classification head over sentence features on labeled
CSV data, then batch-labels verse-line corpus files into the prediction
interchange format the analytics package consumes.
"""
from .data import (
    DROPPED_COLUMN,
    LABELS,
    N_LABELS,
    DataError,
    TrainingExample,
    load_training_csv,
    load_verse_lines,
    stratified_split,
)
from .encoder import HashedEncoder, SbertEncoder, make_encoder
from .modeling import (
    Metrics,
    TrainConfig,
    emit_records,
    f1_scores,
    load_artifact,
    predict,
    save_artifact,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "DROPPED_COLUMN",
    "LABELS",
    "N_LABELS",
    "DataError",
    "HashedEncoder",
    "Metrics",
    "SbertEncoder",
    "TrainConfig",
    "TrainingExample",
    "emit_records",
    "f1_scores",
    "load_artifact",
    "load_training_csv",
    "load_verse_lines",
    "make_encoder",
    "predict",
    "save_artifact",
    "stratified_split",
    "train",
]
