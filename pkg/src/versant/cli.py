"""Command-line front end: validate, ngrams, polarity, labels, compare, run.

Exit status: 0 on success, 2 when the inputs fail validation, 1 on an
internal error. Flags mirror the run configuration; ``--config`` points
at a file of ``key = value`` lines or a JSON object whose settings
override any flags.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .errors import ValidationError, VersantError
from .report import (
    RunConfig,
    agreement_rows,
    alignment_payload,
    chapter_total_rows,
    compute_predictions,
    deviation_rows,
    emit_predictions,
    load_workspace,
    matrix_rows,
    ngram_rows,
    overlap_rows,
    polarity_rows,
    run_pipeline,
)

_BOOL_KEYS = ("lowercase", "remove_stopwords", "lemmatize", "keep_internal_apostrophes")
_PATH_KEYS = {
    "lexicon": "lexicon_path",
    "stopwords": "stopword_path",
    "lemmas": "lemma_path",
    "seeds": "seed_lexicon_path",
    "out": "output_dir",
}


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ValidationError(f"expected a boolean, got {raw!r}")


def _parse_pairs(pairs: list[str] | None, flag: str) -> dict[str, str] | None:
    if not pairs:
        return None
    out: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key or not value:
            raise ValidationError(f"{flag} expects ID=PATH, got {pair!r}")
        out[key] = value
    return out


def parse_config_text(text: str) -> dict:
    """Parse a config file: a JSON object or ``key = value`` lines.

    Map-valued settings use dotted keys in line mode (``corpus.KJV = p``).
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ValidationError("config JSON must be an object")
        return data
    data: dict = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValidationError(f"config line {lineno}: expected key = value")
        key, value = key.strip(), value.strip()
        if "." in key:
            group, _, sub = key.partition(".")
            data.setdefault(group, {})[sub] = value
        else:
            data[key] = value
    return data


def _settings_from_args(args: argparse.Namespace) -> dict:
    settings: dict = {}
    corpus = _parse_pairs(getattr(args, "corpus", None), "--corpus")
    predictions = _parse_pairs(getattr(args, "predictions", None), "--predictions")
    if corpus is not None:
        settings["corpus"] = corpus
    if predictions is not None:
        settings["predictions"] = predictions
    for key, _ in _PATH_KEYS.items():
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    for key in _BOOL_KEYS + ("tau", "top_k"):
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    return settings


def build_run_config(args: argparse.Namespace) -> RunConfig:
    settings = _settings_from_args(args)
    config_path = getattr(args, "config", None)
    if config_path is not None:
        try:
            text = Path(config_path).read_text("utf-8")
        except OSError as exc:
            raise ValidationError(f"cannot read config file: {exc}") from None
        settings.update(parse_config_text(text))
    kwargs: dict = {}
    for key, value in settings.items():
        if key in ("corpus", "predictions"):
            if not isinstance(value, dict) or not all(
                isinstance(k, str) and isinstance(v, str) for k, v in value.items()
            ):
                raise ValidationError(f"{key} must map translation ids to paths")
            kwargs["corpus_paths" if key == "corpus" else "prediction_paths"] = value
        elif key in _PATH_KEYS:
            if not isinstance(value, str):
                raise ValidationError(f"{key} must be a path string")
            kwargs[_PATH_KEYS[key]] = value
        elif key in _BOOL_KEYS:
            kwargs[key] = _parse_bool(value) if isinstance(value, str) else bool(value)
        elif key == "tau":
            try:
                kwargs["tau"] = float(value)
            except (TypeError, ValueError):
                raise ValidationError(f"tau must be a number, got {value!r}") from None
        elif key == "top_k":
            try:
                kwargs["top_k"] = int(value)
            except (TypeError, ValueError):
                raise ValidationError(
                    f"top_k must be an integer, got {value!r}"
                ) from None
        else:
            raise ValidationError(f"unknown config key {key!r}")
    return RunConfig(**kwargs)


def _print_csv(header: tuple[str, ...], rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--corpus",
        action="append",
        metavar="ID=PATH",
        help="translation fixture (repeatable); omit to use the bundled corpus",
    )
    parser.add_argument(
        "--predictions",
        action="append",
        metavar="ID=PATH",
        help="prediction interchange file (repeatable)",
    )
    parser.add_argument("--lexicon", metavar="PATH", help="polarity word list")
    parser.add_argument("--stopwords", metavar="PATH")
    parser.add_argument("--lemmas", metavar="PATH")
    parser.add_argument("--seeds", metavar="PATH", help="baseline seed lexicons")
    parser.add_argument("--tau", type=float, help="label decision threshold")
    parser.add_argument("--top-k", dest="top_k", type=int, help="n-gram list length")
    parser.add_argument(
        "--lowercase",
        action=argparse.BooleanOptionalAction,
        default=None,
    )
    parser.add_argument(
        "--remove-stopwords",
        dest="remove_stopwords",
        action=argparse.BooleanOptionalAction,
        default=None,
    )
    parser.add_argument(
        "--lemmatize",
        action=argparse.BooleanOptionalAction,
        default=None,
    )
    parser.add_argument(
        "--keep-internal-apostrophes",
        dest="keep_internal_apostrophes",
        action="store_true",
        default=None,
    )
    parser.add_argument(
        "--config", metavar="PATH", help="config file overriding the flags above"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="versant",
        description="Verse-aligned corpus analytics: n-grams, polarity, labels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("validate", "parse the corpus and check translation alignment"),
        ("ngrams", "print top-k bigram/trigram tables as CSV"),
        ("polarity", "print per-verse polarity scores as CSV"),
        ("labels", "print sentiment label counts or prediction records"),
        ("compare", "print cross-translation agreement analytics"),
        ("run", "write the full report bundle to a directory"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if name == "ngrams":
            p.add_argument("--n", type=int, choices=(2, 3), help="restrict to one n")
        if name == "polarity":
            p.add_argument(
                "--totals", action="store_true", help="chapter totals instead"
            )
        if name == "labels":
            p.add_argument(
                "--emit",
                action="store_true",
                help="print prediction records instead of the count matrix",
            )
        if name == "compare":
            p.add_argument(
                "--what",
                choices=("agreement", "overlap", "deviation"),
                default="agreement",
            )
        if name == "run":
            p.add_argument("--out", metavar="DIR", help="output directory")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    config = build_run_config(args)
    if args.command == "run":
        bundle = run_pipeline(config)
        for name in bundle.files:
            print(f"wrote {bundle.output_dir / name}")
        return 0
    ws = load_workspace(config)
    if args.command == "validate":
        payload = alignment_payload(ws)
        print(json.dumps(payload, sort_keys=True, indent=2))
        return 0 if payload["aligned"] else 2
    if args.command == "ngrams":
        rows = ngram_rows(ws)
        if args.n is not None:
            rows = [row for row in rows if row[1] == args.n]
        _print_csv(("translation", "n", "rank", "gram", "count"), rows)
        return 0
    if args.command == "polarity":
        if args.totals:
            _print_csv(("translation", "chapter", "total"), chapter_total_rows(ws))
        else:
            _print_csv(("translation", "chapter", "verse", "score"), polarity_rows(ws))
        return 0
    if args.command == "labels":
        predictions, _ = compute_predictions(ws)
        if args.emit:
            sys.stdout.write(emit_predictions(predictions).decode("utf-8"))
        else:
            _print_csv(
                ("scope", "translation", "label", "count"),
                matrix_rows(ws, predictions),
            )
        return 0
    if args.command == "compare":
        if args.what == "agreement":
            predictions, _ = compute_predictions(ws)
            _print_csv(
                ("chapter", "verse", "intersection", "union", "jaccard"),
                agreement_rows(ws, predictions),
            )
        elif args.what == "overlap":
            _print_csv(("a", "b", "jaccard"), overlap_rows(ws))
        else:
            _print_csv(("chapter", "deviation"), deviation_rows(ws))
        return 0
    raise ValidationError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except VersantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
