"""Character-level TF-IDF over 1- and 2-grams.

Fitted once on the lowercased training corpus; the resulting vocabulary is
immutable and cheap to apply per password. Weighting is the smoothed-idf
variant, idf(t) = ln((1 + n_docs) / (1 + df(t))) + 1, with L2-normalized
output vectors.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import EmptyCorpus

N_RANGE = (1, 2)


def char_ngrams(text: str) -> list[str]:
    """All 1-grams and 2-grams of the lowercased text, with multiplicity."""
    s = text.lower()
    grams = list(s)
    grams.extend(s[i : i + 2] for i in range(len(s) - 1))
    return grams


@dataclass(frozen=True)
class SparseVector:
    """Column-sorted (index, weight) pairs; weights are nonzero."""

    entries: tuple[tuple[int, float], ...]
    dimension: int


@dataclass(frozen=True)
class NgramVocabulary:
    term_index: dict[str, int]
    idf: tuple[float, ...]
    max_features: int
    corpus_size: int

    def __len__(self) -> int:
        return len(self.term_index)

    def to_triples(self) -> list[tuple[str, int, float]]:
        return sorted(
            (term, col, self.idf[col]) for term, col in self.term_index.items()
        )

    @classmethod
    def from_triples(cls, triples, max_features: int, corpus_size: int) -> "NgramVocabulary":
        term_index = {term: int(col) for term, col, _ in triples}
        idf = [0.0] * len(term_index)
        for _, col, w in triples:
            idf[int(col)] = float(w)
        return cls(term_index, tuple(idf), max_features, corpus_size)


def fit_vocabulary(corpus, max_features: int = 500) -> NgramVocabulary:
    """Build the n-gram vocabulary from training passwords.

    Keeps the max_features terms with the highest total corpus frequency,
    ties broken lexicographically; columns are assigned in lexicographic
    term order so the layout is deterministic.
    """
    corpus = list(corpus)
    if not corpus:
        raise EmptyCorpus("cannot fit a vocabulary on an empty corpus")
    if max_features < 1:
        raise ValueError("max_features must be >= 1")

    total = Counter()
    df = Counter()
    for doc in corpus:
        grams = char_ngrams(doc)
        total.update(grams)
        df.update(set(grams))

    kept = sorted(total, key=lambda t: (-total[t], t))[:max_features]
    term_index = {t: i for i, t in enumerate(sorted(kept))}
    n = len(corpus)
    idf = [0.0] * len(term_index)
    for t, col in term_index.items():
        idf[col] = math.log((1 + n) / (1 + df[t])) + 1.0
    return NgramVocabulary(term_index, tuple(idf), max_features, n)


def transform(pw: str, vocab: NgramVocabulary) -> SparseVector:
    """TF-IDF weights of the password's in-vocabulary n-grams, L2-normalized."""
    tf = Counter(char_ngrams(pw))
    weighted = []
    for term, count in tf.items():
        col = vocab.term_index.get(term)
        if col is not None:
            weighted.append((col, count * vocab.idf[col]))
    norm = math.sqrt(sum(w * w for _, w in weighted))
    if norm > 0:
        weighted = [(c, w / norm) for c, w in weighted]
    weighted.sort()
    return SparseVector(tuple(weighted), len(vocab))
