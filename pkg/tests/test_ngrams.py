import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from passgauge.errors import EmptyCorpus
from passgauge.ngrams import NgramVocabulary, char_ngrams, fit_vocabulary, transform


def naive_tfidf(corpus, password, max_features):
    """Nested-loop TF-IDF oracle: no sparsity, no shortcuts."""
    corpus = [doc.lower() for doc in corpus]
    password = password.lower()

    def grams(text):
        out = []
        for n in (1, 2):
            for i in range(len(text) - n + 1):
                out.append(text[i : i + n])
        return out

    totals = {}
    for doc in corpus:
        for g in grams(doc):
            totals[g] = totals.get(g, 0) + 1
    kept = sorted(totals, key=lambda t: (-totals[t], t))[:max_features]
    kept = sorted(kept)

    weights = []
    for term in kept:
        df = sum(1 for doc in corpus if term in grams(doc))
        idf = math.log((1 + len(corpus)) / (1 + df)) + 1
        tf = sum(1 for g in grams(password) if g == term)
        weights.append(tf * idf)
    norm = math.sqrt(sum(w * w for w in weights))
    if norm > 0:
        weights = [w / norm for w in weights]
    return kept, weights


def dense(vec):
    out = [0.0] * vec.dimension
    for col, w in vec.entries:
        out[col] = w
    return out


class TestFitVocabulary:
    def test_two_doc_example(self):
        vocab = fit_vocabulary(["ab", "bc"], max_features=10)
        assert set(vocab.term_index) == {"a", "b", "c", "ab", "bc"}
        assert vocab.idf[vocab.term_index["b"]] == pytest.approx(1.0)
        assert vocab.idf[vocab.term_index["a"]] == pytest.approx(math.log(3 / 2) + 1)

    def test_single_document(self):
        vocab = fit_vocabulary(["aa"], max_features=10)
        assert set(vocab.term_index) == {"a", "aa"}

    def test_df_of_duplicate_docs(self):
        vocab = fit_vocabulary(["12", "qw", "12"], max_features=10)
        assert vocab.idf[vocab.term_index["12"]] == pytest.approx(math.log(4 / 3) + 1)

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            fit_vocabulary([], max_features=5)

    def test_max_features_cap_with_lexicographic_ties(self):
        vocab = fit_vocabulary(["ab", "cd"], max_features=2)
        # All terms have corpus frequency 1; lexicographic order keeps a, ab.
        assert set(vocab.term_index) == {"a", "ab"}

    def test_all_idf_positive(self):
        vocab = fit_vocabulary(["abcd", "bcda", "cdab"], max_features=50)
        assert all(w > 0 for w in vocab.idf)

    def test_duplicated_doc_terms_never_gain_idf(self):
        v1 = fit_vocabulary(["ab", "cd"], max_features=50)
        v2 = fit_vocabulary(["ab", "cd", "ab"], max_features=50)
        for term in char_ngrams("ab"):
            assert v2.idf[v2.term_index[term]] <= v1.idf[v1.term_index[term]] + 1e-12


class TestTransform:
    def test_example_ab(self):
        vocab = fit_vocabulary(["ab", "bc"], max_features=10)
        vec = transform("ab", vocab)
        nonzero = {col for col, _ in vec.entries}
        expected = {vocab.term_index[t] for t in ("a", "b", "ab")}
        assert nonzero == expected
        assert sum(w * w for _, w in vec.entries) == pytest.approx(1.0, abs=1e-9)

    def test_empty_password(self):
        vocab = fit_vocabulary(["ab"], max_features=10)
        assert transform("", vocab).entries == ()

    def test_oov_only(self):
        vocab = fit_vocabulary(["ab"], max_features=10)
        assert transform("xyz", vocab).entries == ()

    def test_dimension_stability(self):
        vocab = fit_vocabulary(["abc", "def"], max_features=10)
        for pw in ("", "abc", "zzzzzz", "a"):
            assert transform(pw, vocab).dimension == len(vocab)

    def test_columns_strictly_increasing(self):
        vocab = fit_vocabulary(["abcabc"], max_features=20)
        cols = [c for c, _ in transform("abcabc", vocab).entries]
        assert cols == sorted(set(cols))


@given(
    st.lists(st.text(alphabet="abc12", max_size=8), min_size=1, max_size=20),
    st.text(alphabet="abc12", max_size=8),
    st.integers(min_value=1, max_value=30),
)
@settings(max_examples=150, deadline=None)
def test_matches_naive_oracle(corpus, password, max_features):
    vocab = fit_vocabulary(corpus, max_features)
    kept, expected = naive_tfidf(corpus, password, max_features)
    assert sorted(vocab.term_index) == kept
    got = dense(transform(password, vocab))
    ordered = [got[vocab.term_index[t]] for t in kept]
    assert ordered == pytest.approx(expected, abs=1e-9)


def test_roundtrip_triples():
    vocab = fit_vocabulary(["password", "qwerty"], max_features=40)
    clone = NgramVocabulary.from_triples(vocab.to_triples(), vocab.max_features, vocab.corpus_size)
    assert clone.term_index == vocab.term_index
    assert clone.idf == pytest.approx(vocab.idf)
