"""Command line: train a classifier, batch-label a corpus file.

Exit status mirrors the analytics package: 0 success, 2 bad inputs,
1 internal error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .data import DataError, load_training_csv, load_verse_lines
from .modeling import (
    TrainConfig,
    emit_records,
    load_artifact,
    predict,
    save_artifact,
    train,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentiwave",
        description="Multi-label sentiment sidecar: train and batch-predict.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="fit a classifier on a labeled CSV")
    p_train.add_argument("--data", required=True, metavar="CSV")
    p_train.add_argument("--out", required=True, metavar="ARTIFACT")
    p_train.add_argument("--encoder", default="hashed", metavar="SPEC",
                         help="hashed | hashed-bow-<dim> | sbert[:model] | auto")
    p_train.add_argument("--seed", type=int, default=7)
    p_train.add_argument("--epochs", type=int, default=60)
    p_train.add_argument("--lr", type=float, default=0.05)
    p_train.add_argument("--val-fraction", dest="val_fraction", type=float, default=0.2)
    p_train.add_argument("--tau", type=float, default=0.5)

    p_pred = sub.add_parser("predict", help="label a verse-line corpus file")
    p_pred.add_argument("--model", required=True, metavar="ARTIFACT")
    p_pred.add_argument("--corpus", required=True, metavar="FILE")
    p_pred.add_argument("--translation", required=True, metavar="ID")
    p_pred.add_argument("--out", required=True, metavar="FILE")
    return parser


def _write_atomic(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _run_train(args: argparse.Namespace) -> int:
    config = TrainConfig(
        encoder=args.encoder,
        seed=args.seed,
        epochs=args.epochs,
        lr=args.lr,
        val_fraction=args.val_fraction,
        tau=args.tau,
    )
    dataset = load_training_csv(args.data)
    artifact, metrics = train(dataset, config)
    save_artifact(artifact, args.out)
    print(json.dumps(metrics.as_dict(), indent=2, sort_keys=True))
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def _run_predict(args: argparse.Namespace) -> int:
    artifact = load_artifact(args.model)
    verses = load_verse_lines(args.corpus)
    records = predict(artifact, verses, args.translation)
    _write_atomic(args.out, emit_records(records))
    print(f"wrote {args.out} ({len(records)} records)", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "train":
            return _run_train(args)
        return _run_predict(args)
    except (DataError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
