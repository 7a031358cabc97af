"""Corpus analytics for verse-aligned translations.

Parsing and alignment, preprocessing, n-gram tables, word-list polarity,
ten-way multi-label sentiment aggregation, cross-translation comparison,
and a deterministic CSV/JSON report pipeline with a CLI front end.
"""

from .corpus import (
    AlignmentReport,
    ParallelCorpus,
    Translation,
    Verse,
    VerseRef,
    count_units,
    count_verse_units,
    format_verse_lines,
    parse_translation,
    verify_alignment,
)
from .errors import (
    DomainError,
    EncodingError,
    NotFoundError,
    ParseError,
    StructureError,
    ValidationError,
    VersantError,
)
from .preprocess import (
    PreprocessConfig,
    TokenizedVerse,
    lemmatize,
    normalize,
    preprocess_translation,
    preprocess_verse,
    tokenize,
)
from .ngrams import NgramTable, extract_ngrams, top_k
from .polarity import Lexicon, PolaritySeries, default_lexicon, load_lexicon, polarity_series, verse_polarity
from .labels import (
    LabelSet,
    Prediction,
    SentimentLabel,
    SentimentMatrix,
    baseline_classify,
    cumulative_counts,
    load_predictions,
    threshold,
)
from .compare import AgreementRecord, label_agreement, polarity_deviation, vocab_overlap
from .report import ReportBundle, RunConfig, emit_predictions, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "AlignmentReport",
    "AgreementRecord",
    "DomainError",
    "EncodingError",
    "LabelSet",
    "Lexicon",
    "NgramTable",
    "NotFoundError",
    "ParallelCorpus",
    "ParseError",
    "PolaritySeries",
    "Prediction",
    "PreprocessConfig",
    "ReportBundle",
    "RunConfig",
    "SentimentLabel",
    "SentimentMatrix",
    "StructureError",
    "TokenizedVerse",
    "Translation",
    "ValidationError",
    "Verse",
    "VerseRef",
    "VersantError",
    "baseline_classify",
    "count_units",
    "count_verse_units",
    "cumulative_counts",
    "default_lexicon",
    "emit_predictions",
    "extract_ngrams",
    "format_verse_lines",
    "label_agreement",
    "lemmatize",
    "load_lexicon",
    "load_predictions",
    "normalize",
    "parse_translation",
    "polarity_deviation",
    "polarity_series",
    "preprocess_translation",
    "preprocess_verse",
    "run_pipeline",
    "threshold",
    "tokenize",
    "top_k",
    "verify_alignment",
    "verse_polarity",
    "vocab_overlap",
]
