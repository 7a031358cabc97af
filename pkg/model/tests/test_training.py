import json
from importlib import resources

import pytest
import torch

from sentiwave.data import load_training_csv
from sentiwave.encoder import HashedEncoder, make_encoder
from sentiwave.modeling import TrainConfig, f1_scores, load_artifact, save_artifact, train

FIXTURE = str(resources.files("sentiwave") / "data" / "train_fixture.csv")
FAST = TrainConfig(epochs=25)


@pytest.fixture(scope="module")
def fitted():
    dataset = load_training_csv(FIXTURE)
    return train(dataset, FAST)


def test_hashed_encoder_is_deterministic_and_order_sensitive():
    enc = HashedEncoder(128)
    a = enc.encode(["hope is rising", "hope is rising"])
    assert torch.equal(a[0], a[1])
    b = HashedEncoder(128).encode(["hope is rising"])
    assert torch.equal(a[0], b[0])
    # bigrams make word order matter
    c = enc.encode(["rising is hope"])
    assert not torch.equal(a[0], c[0])
    norms = a.norm(dim=1)
    assert torch.allclose(norms, torch.ones(2))


def test_make_encoder_specs():
    assert make_encoder("hashed").dim == 512
    assert make_encoder("hashed-bow-64").dim == 64
    with pytest.raises(ValueError):
        make_encoder("quantum")


def test_f1_scores_hand_example():
    truth = [[1, 0, 0, 0, 0, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]]
    pred = [[1, 0, 0, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0, 0, 0]]
    per_label, micro, macro = f1_scores(truth, pred)
    assert per_label["optimistic"] == 1.0
    assert per_label["thankful"] == 1.0
    assert per_label["joking"] == 0.0  # one miss
    assert per_label["sad"] == 1.0  # absent label convention
    # tp=2, fp=0, fn=1 -> 4/5
    assert micro == pytest.approx(0.8)
    # two perfect labels, one miss, seven absent -> (2 + 0 + 7) / 10
    assert macro == pytest.approx(0.9)


def test_f1_all_empty_is_zero_when_positives_exist():
    truth = [[1] + [0] * 9, [0] * 10]
    pred = [[0] * 10, [0] * 10]
    _, micro, _ = f1_scores(truth, pred)
    assert micro == 0.0


def test_training_beats_empty_baseline(fitted):
    _, metrics = fitted
    assert metrics.micro_f1 > metrics.baseline_micro_f1
    assert metrics.baseline_micro_f1 == 0.0
    assert 0.5 < metrics.micro_f1 <= 1.0
    assert all(0.0 <= v <= 1.0 for v in metrics.per_label_f1.values())
    assert metrics.n_train + metrics.n_val == 432


def test_same_seed_runs_are_identical():
    dataset = load_training_csv(FIXTURE)
    a = train(dataset, FAST)[1].as_dict()
    b = train(dataset, FAST)[1].as_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_artifact_round_trip(fitted, tmp_path):
    artifact, metrics = fitted
    path = str(tmp_path / "model.pt")
    save_artifact(artifact, path)
    loaded = load_artifact(path)
    assert loaded["meta"]["labels"] == list(artifact["meta"]["labels"])
    assert loaded["meta"]["metrics"] == metrics.as_dict()
    assert loaded["meta"]["encoder"].startswith("hashed")
    assert len(loaded["meta"]["config_digest"]) == 64


def test_load_artifact_rejects_garbage(tmp_path):
    path = tmp_path / "junk.pt"
    torch.save({"format": "something-else"}, str(path))
    with pytest.raises(ValueError):
        load_artifact(str(path))


def test_train_rejects_empty_dataset():
    with pytest.raises(ValueError):
        train([], FAST)
