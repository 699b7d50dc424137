import csv
import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from passgauge.errors import EmptyMatrix, InsufficientClassSize, InvalidLabel, LengthMismatch
from passgauge.metrics import (
    anova_f_scores,
    classification_metrics,
    confusion_matrix,
    emit_report,
    rank_features,
)

matrices = st.lists(st.integers(0, 40), min_size=9, max_size=9).map(
    lambda cells: np.array(cells).reshape(3, 3)
)


class TestConfusionMatrix:
    def test_perfect_is_diagonal(self):
        cm = confusion_matrix([0, 1, 2, 2], [0, 1, 2, 2])
        assert np.array_equal(cm, np.diag([1, 1, 2]))

    def test_direct_count(self):
        cm = confusion_matrix([0, 0, 1], [0, 1, 1])
        assert cm[0, 0] == 1 and cm[0, 1] == 1 and cm[1, 1] == 1
        assert cm.sum() == 3

    def test_empty(self):
        assert confusion_matrix([], []).sum() == 0

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            confusion_matrix([0, 1], [0])

    def test_invalid_label(self):
        with pytest.raises(InvalidLabel):
            confusion_matrix([0, 3], [0, 0])

    @given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=200))
    def test_total_equals_samples(self, pairs):
        t, p = zip(*pairs)
        assert confusion_matrix(t, p).sum() == len(pairs)


class TestClassificationMetrics:
    def test_diagonal_all_ones(self):
        rep = classification_metrics(np.diag([3, 4, 5]))
        assert rep.accuracy == 1.0
        assert rep.precision == rep.recall == rep.f1 == (1.0, 1.0, 1.0)
        assert rep.weighted_f1 == 1.0

    def test_two_class_hand_oracle(self):
        cm = np.array([[50, 10, 0], [5, 35, 0], [0, 0, 0]])
        rep = classification_metrics(cm)
        assert rep.accuracy == pytest.approx(0.85)
        assert rep.precision[0] == pytest.approx(50 / 55)
        assert rep.recall[0] == pytest.approx(50 / 60)
        assert rep.f1[0] == pytest.approx(2 * (50 / 55) * (50 / 60) / (50 / 55 + 50 / 60))

    def test_zero_prediction_convention(self):
        cm = np.array([[5, 0, 0], [3, 0, 0], [0, 0, 2]])
        rep = classification_metrics(cm)  # class 1 never predicted
        assert rep.precision[1] == 0.0
        assert rep.recall[1] == 0.0
        assert rep.f1[1] == 0.0

    def test_empty_matrix(self):
        with pytest.raises(EmptyMatrix):
            classification_metrics(np.zeros((3, 3)))

    @given(matrices.filter(lambda m: m.sum() > 0))
    @settings(max_examples=200)
    def test_accuracy_trace_identity_and_weighted_recall(self, cm):
        rep = classification_metrics(cm)
        assert rep.accuracy == pytest.approx(np.trace(cm) / cm.sum())
        assert rep.weighted_recall == pytest.approx(rep.accuracy, abs=1e-12)
        for v in rep.precision + rep.recall + rep.f1:
            assert 0.0 <= v <= 1.0


class TestAnova:
    def test_constant_feature_zero(self):
        X = np.array([[1.0], [1.0], [1.0], [1.0]])
        y = [0, 0, 1, 1]
        assert anova_f_scores(X, y)[0] == 0.0

    def test_perfect_separator_infinite(self):
        X = np.array([[0.0], [0.0], [1.0], [1.0]])
        y = [0, 0, 1, 1]
        assert math.isinf(anova_f_scores(X, y)[0])

    def test_hand_oracle(self):
        # {1,2} vs {3,4}: SSB=4, SSW=1, F = (4/1)/(1/2) = 8.
        X = np.array([[1.0], [2.0], [3.0], [4.0]])
        y = [0, 0, 1, 1]
        assert anova_f_scores(X, y)[0] == pytest.approx(8.0)

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_matches_scipy_f_oneway(self, seed):
        rng = np.random.default_rng(seed)
        n_per = int(rng.integers(2, 4))
        X = rng.normal(size=(3 * n_per, 2))
        y = np.repeat([0, 1, 2], n_per)
        ours = anova_f_scores(X, y)
        for j in range(2):
            groups = [X[y == c, j] for c in (0, 1, 2)]
            expected = stats.f_oneway(*groups).statistic
            assert ours[j] == pytest.approx(expected, rel=1e-9)

    def test_insufficient_class(self):
        with pytest.raises(InsufficientClassSize):
            anova_f_scores(np.zeros((3, 1)), [0, 0, 1])

    def test_infinite_ranks_first(self):
        X = np.array([[0.0, 0.3], [0.0, 0.1], [1.0, 0.9], [1.0, 1.2]])
        ranking = rank_features(anova_f_scores(X, [0, 0, 1, 1]), ["sep", "noisy"])
        assert ranking[0][0] == "sep"


class TestEmitReport:
    def fixture(self):
        cm = np.array([[8, 1, 0], [1, 9, 1], [0, 0, 10]])
        rep = classification_metrics(cm)
        ranking = [("entropy", 12.5), ("length", float("inf")), ("noise", 0.0)]
        return rep, cm, ranking

    def test_roundtrip(self, tmp_path):
        rep, cm, ranking = self.fixture()
        paths = emit_report(rep, cm, ranking, tmp_path)
        payload = json.loads(paths["metrics"].read_text())
        assert payload["accuracy"] == pytest.approx(rep.accuracy)
        assert payload["confusion_matrix"] == cm.tolist()
        rows = list(csv.reader(paths["confusion"].open()))
        assert rows[0] == ["true\\predicted", "weak", "medium", "strong"]
        assert [r[0] for r in rows[1:]] == ["weak", "medium", "strong"]

    def test_deterministic_bytes(self, tmp_path):
        rep, cm, ranking = self.fixture()
        p1 = emit_report(rep, cm, ranking, tmp_path / "a")
        p2 = emit_report(rep, cm, ranking, tmp_path / "b")
        for key in p1:
            assert p1[key].read_bytes() == p2[key].read_bytes()

    def test_ranking_csv(self, tmp_path):
        rep, cm, ranking = self.fixture()
        paths = emit_report(rep, cm, ranking, tmp_path)
        rows = list(csv.reader(paths["ranking"].open()))
        assert rows[0] == ["rank", "feature", "anova_f"]
        assert [r[1] for r in rows[1:]] == ["entropy", "length", "noise"]
