import json

import pytest

from versant.cli import main, parse_config_text
from versant.errors import ValidationError
from versant.labels import load_predictions


def test_validate_bundled_corpus(capsys):
    assert main(["validate"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["aligned"] is True
    assert payload["verse_counts"]["KJV"] == {"5": 48, "6": 34, "7": 29}


def test_validate_reports_misalignment(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_text("5:1 one verse here.\n5:2 and another.\n")
    b.write_text("5:1 one verse here.\n")
    code = main(["validate", "--corpus", f"A={a}", "--corpus", f"B={b}"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 2
    assert payload["aligned"] is False
    assert payload["mismatches"]


def test_ngrams_csv(capsys):
    assert main(["ngrams", "--n", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "translation,n,rank,gram,count"
    assert all(line.split(",")[1] == "2" for line in lines[1:])
    # five translations, ten ranks each
    assert len(lines) == 1 + 5 * 10


def test_polarity_totals_respect_config_file(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text('{"lemmatize": false}')
    assert main(["polarity", "--totals", "--lemmatize", "--config", str(config)]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    kjv = {
        int(chapter): int(total)
        for tid, chapter, total in (row.split(",") for row in rows)
        if tid == "KJV"
    }
    assert kjv == {5: -5, 6: 19, 7: -12}


def test_config_line_syntax(tmp_path, capsys):
    config = tmp_path / "run.conf"
    config.write_text("lemmatize = false\ntau = 0.5\n")
    assert main(["polarity", "--totals", "--config", str(config)]) == 0
    assert capsys.readouterr().out.startswith("translation,chapter,total")


def test_parse_config_text_dotted_keys():
    data = parse_config_text("corpus.KJV = /tmp/x.txt\ntop_k = 5\n")
    assert data == {"corpus": {"KJV": "/tmp/x.txt"}, "top_k": "5"}
    with pytest.raises(ValidationError):
        parse_config_text("no separator here\n")
    with pytest.raises(ValidationError):
        parse_config_text("{not json")


def test_labels_emit_round_trips(capsys):
    assert main(["labels", "--emit"]) == 0
    out = capsys.readouterr().out
    preds = load_predictions(out)
    assert len(preds) == 5 * (48 + 34 + 29)
    assert all(p.tau == 0.5 for p in preds)


def test_compare_agreement(capsys):
    assert main(["compare"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "chapter,verse,intersection,union,jaccard"
    assert len(lines) == 1 + 48 + 34 + 29


def test_compare_deviation(capsys):
    assert main(["compare", "--what", "deviation"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "chapter,deviation"
    assert [line.split(",")[0] for line in lines[1:]] == ["5", "6", "7"]


def test_run_writes_bundle(tmp_path, capsys):
    out = tmp_path / "bundle"
    assert main(["run", "--out", str(out)]) == 0
    assert (out / "manifest.json").exists()
    # eight artifacts plus the manifest
    assert len(capsys.readouterr().out.splitlines()) == 9


def test_bad_corpus_path_exits_2(tmp_path, capsys):
    code = main(["validate", "--corpus", f"KJV={tmp_path / 'nope.txt'}"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_pair_exits_2(capsys):
    assert main(["validate", "--corpus", "KJV"]) == 2
    assert "ID=PATH" in capsys.readouterr().err


def test_unknown_config_key_exits_2(tmp_path, capsys):
    config = tmp_path / "run.json"
    config.write_text('{"mystery": 1}')
    assert main(["validate", "--config", str(config)]) == 2
    assert "mystery" in capsys.readouterr().err


def test_bad_tau_flag_exits_2(capsys):
    assert main(["labels", "--tau", "1.5"]) == 2
    assert "tau" in capsys.readouterr().err
