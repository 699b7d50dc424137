"""Multinomial logistic regression baseline.

Full-batch gradient descent with a fixed step, zero-initialized weights,
and L2 regularization. Deterministic: no randomness anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, NonFiniteLoss, SingleClassTrainingSet

DEFAULT_LEARNING_RATE = 0.1
DEFAULT_EPOCHS = 300
DEFAULT_L2 = 1e-4


@dataclass
class LogisticRegressionModel:
    weights: np.ndarray  # (n_classes, n_features)
    bias: np.ndarray  # (n_classes,)
    l2: float
    loss_trace: list[float] = field(default_factory=list)

    @property
    def n_features(self) -> int:
        return self.weights.shape[1]


def softmax(logits):
    z = logits - logits.max(axis=1, keepdims=True)
    e = np.exp(z)
    return e / e.sum(axis=1, keepdims=True)


def _loss_and_grad(W, b, X, Y, l2):
    n = len(X)
    # Divergence shows up as inf/nan loss, reported via NonFiniteLoss upstream.
    with np.errstate(over="ignore", invalid="ignore"):
        P = softmax(X @ W.T + b)
        loss = -np.log(np.clip((P * Y).sum(axis=1), 1e-300, None)).mean()
        loss += 0.5 * l2 * float((W * W).sum())
        G = (P - Y) / n
        return loss, G.T @ X + l2 * W, G.sum(axis=0)


def train_logreg(
    X,
    y,
    learning_rate: float = DEFAULT_LEARNING_RATE,
    epochs: int = DEFAULT_EPOCHS,
    l2: float = DEFAULT_L2,
    n_classes: int = 3,
) -> LogisticRegressionModel:
    """Minimize multinomial cross-entropy by full-batch gradient descent."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if len(np.unique(y)) < 2:
        raise SingleClassTrainingSet("training set contains a single class")
    n, d = X.shape
    Y = np.zeros((n, n_classes))
    Y[np.arange(n), y] = 1.0

    W = np.zeros((n_classes, d))
    b = np.zeros(n_classes)
    trace = []
    for _ in range(epochs):
        loss, gW, gb = _loss_and_grad(W, b, X, Y, l2)
        if not np.isfinite(loss):
            raise NonFiniteLoss("training loss is not finite; reduce the learning rate")
        trace.append(float(loss))
        W -= learning_rate * gW
        b -= learning_rate * gb
    return LogisticRegressionModel(W, b, l2, trace)


def predict_proba(model: LogisticRegressionModel, X):
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != model.n_features:
        raise DimensionMismatch(f"expected {model.n_features} features, got {X.shape[1]}")
    return softmax(X @ model.weights.T + model.bias)


def predict_class(model: LogisticRegressionModel, X):
    """Argmax class; ties resolve toward the lower (weaker) class id."""
    return np.argmax(predict_proba(model, X), axis=1)
