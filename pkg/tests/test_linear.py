import numpy as np
import pytest

from passgauge.errors import NonFiniteLoss, SingleClassTrainingSet
from passgauge.linear import (
    LogisticRegressionModel,
    _loss_and_grad,
    predict_class,
    predict_proba,
    train_logreg,
)

FIXTURE_X = np.array(
    [
        [0.2, -1.0, 0.5],
        [1.5, 0.3, -0.2],
        [-0.7, 0.8, 1.1],
        [0.0, 0.0, -1.3],
        [2.1, -0.4, 0.9],
    ]
)
FIXTURE_Y = np.array([0, 1, 2, 0, 1])


def test_gradient_matches_finite_differences():
    n, d = FIXTURE_X.shape
    Y = np.zeros((n, 3))
    Y[np.arange(n), FIXTURE_Y] = 1.0
    rng = np.random.default_rng(0)
    W = rng.normal(scale=0.5, size=(3, d))
    b = rng.normal(scale=0.5, size=3)
    l2 = 1e-3

    _, gW, gb = _loss_and_grad(W, b, FIXTURE_X, Y, l2)

    eps = 1e-6
    max_rel = 0.0
    for arr, grad in ((W, gW), (b, gb)):
        it = np.nditer(arr, flags=["multi_index"])
        while not it.finished:
            i = it.multi_index
            orig = arr[i]
            arr[i] = orig + eps
            lp, _, _ = _loss_and_grad(W, b, FIXTURE_X, Y, l2)
            arr[i] = orig - eps
            lm, _, _ = _loss_and_grad(W, b, FIXTURE_X, Y, l2)
            arr[i] = orig
            numeric = (lp - lm) / (2 * eps)
            denom = max(abs(numeric), abs(grad[i]), 1e-8)
            max_rel = max(max_rel, abs(numeric - grad[i]) / denom)
            it.iternext()
    assert max_rel <= 1e-5


def test_zero_weight_model_is_uniform():
    model = LogisticRegressionModel(np.zeros((3, 4)), np.zeros(3), 0.0)
    proba = predict_proba(model, np.random.default_rng(1).normal(size=(10, 4)))
    assert np.allclose(proba, 1 / 3)


def test_separable_1d_reaches_full_accuracy():
    X = np.array([[-2.0], [-1.5], [-1.8], [1.4], [2.0], [1.7]])
    y = np.array([0, 0, 0, 1, 1, 1])
    model = train_logreg(X, y, learning_rate=0.5, epochs=500)
    assert (predict_class(model, X) == y).all()


def test_loss_non_increasing():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(60, 4))
    y = rng.integers(0, 3, size=60)
    model = train_logreg(X, y)
    diffs = np.diff(model.loss_trace)
    assert np.all(diffs <= 1e-6)


def test_deterministic():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(30, 3))
    y = rng.integers(0, 3, size=30)
    m1 = train_logreg(X, y)
    m2 = train_logreg(X, y)
    assert np.array_equal(m1.weights, m2.weights)
    assert np.array_equal(m1.bias, m2.bias)


def test_softmax_simplex():
    rng = np.random.default_rng(11)
    X = rng.normal(size=(40, 3))
    y = rng.integers(0, 3, size=40)
    model = train_logreg(X, y, epochs=50)
    proba = predict_proba(model, rng.normal(size=(200, 3)))
    assert np.allclose(proba.sum(axis=1), 1.0, atol=1e-9)
    assert np.all(proba >= 0)


def test_single_class_rejected():
    with pytest.raises(SingleClassTrainingSet):
        train_logreg(np.zeros((5, 2)), np.zeros(5, dtype=int))


def test_divergence_raises():
    X = np.array([[1e3], [-1e3], [5e2]])
    y = np.array([0, 1, 2])
    with pytest.raises(NonFiniteLoss):
        train_logreg(X, y, learning_rate=1e12, epochs=50)
