"""Text encoders feeding the classification head.

Two backends behind one interface. The transformer backend gives real
sentence embeddings but needs its weights available locally; the hashed
bag-of-features backend is dependency-light, fully deterministic, and
keeps training and inference working in offline environments. The
artifact records which encoder produced it, and prediction refuses to
run with a mismatched one.
"""
from __future__ import annotations

import hashlib
import re
import warnings

import torch

_TOKEN = re.compile(r"[a-z0-9']+")


class HashedEncoder:
    """Unigram + bigram hashing into a fixed-width l2-normalized vector."""

    def __init__(self, dim: int = 512):
        if dim < 16:
            raise ValueError(f"dim too small to be useful: {dim}")
        self.dim = dim
        self.id = f"hashed-bow-{dim}"

    def _bucket(self, feature: str) -> int:
        digest = hashlib.blake2b(feature.encode("utf-8"), digest_size=4).digest()
        return int.from_bytes(digest, "big") % self.dim

    def encode(self, texts: list[str]) -> torch.Tensor:
        out = torch.zeros((len(texts), self.dim), dtype=torch.float32)
        for i, text in enumerate(texts):
            tokens = _TOKEN.findall(text.lower())
            for tok in tokens:
                out[i, self._bucket(tok)] += 1.0
            for a, b in zip(tokens, tokens[1:]):
                out[i, self._bucket(a + " " + b)] += 1.0
            norm = float(out[i].norm())
            if norm > 0:
                out[i] /= norm
        return out


class SbertEncoder:
    """Sentence-transformer wrapper; import deferred so it stays optional."""

    def __init__(self, model_name: str = "sentence-transformers/all-MiniLM-L6-v2"):
        from sentence_transformers import SentenceTransformer

        self._model = SentenceTransformer(model_name)
        self.dim = int(self._model.get_sentence_embedding_dimension())
        self.id = f"sbert:{model_name}"

    def encode(self, texts: list[str]) -> torch.Tensor:
        emb = self._model.encode(
            texts, convert_to_tensor=True, show_progress_bar=False
        )
        return emb.to(torch.float32).cpu()


def make_encoder(spec: str = "auto"):
    """Build an encoder from its spec string.

    "hashed" or "hashed-bow-<dim>" selects the offline backend, "sbert"
    or "sbert:<model>" the transformer, and "auto" tries the transformer
    first and falls back to hashed when its weights cannot be loaded.
    """
    if spec.startswith("hashed"):
        tail = spec.rsplit("-", 1)[-1]
        dim = int(tail) if tail.isdigit() else 512
        return HashedEncoder(dim)
    if spec.startswith("sbert"):
        _, _, name = spec.partition(":")
        return SbertEncoder(name) if name else SbertEncoder()
    if spec == "auto":
        try:
            return SbertEncoder()
        except Exception as exc:
            warnings.warn(f"transformer encoder unavailable ({exc}); using hashed features")
            return HashedEncoder()
    raise ValueError(f"unknown encoder spec {spec!r}")
