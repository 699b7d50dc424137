"""Evaluation: confusion matrix, classification metrics, ANOVA feature ranking.

Zero-denominator conventions: precision and recall fall back to 0, F1 is 0
when both components are 0. A feature that separates classes with zero
within-class variance gets an infinite F-value and ranks first.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyMatrix, InsufficientClassSize, InvalidLabel, LengthMismatch

LABEL_NAMES = ("weak", "medium", "strong")
N_CLASSES = 3


def confusion_matrix(true_labels, predicted_labels) -> np.ndarray:
    """3x3 counts; rows are true classes, columns predicted."""
    t = np.asarray(true_labels, dtype=int)
    p = np.asarray(predicted_labels, dtype=int)
    if len(t) != len(p):
        raise LengthMismatch(f"{len(t)} true labels vs {len(p)} predictions")
    if len(t) and (t.min() < 0 or t.max() >= N_CLASSES or p.min() < 0 or p.max() >= N_CLASSES):
        raise InvalidLabel("labels must lie in {0, 1, 2}")
    cm = np.zeros((N_CLASSES, N_CLASSES), dtype=int)
    np.add.at(cm, (t, p), 1)
    return cm


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: tuple[float, ...]
    recall: tuple[float, ...]
    f1: tuple[float, ...]
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    support: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "per_class": {
                name: {
                    "precision": self.precision[c],
                    "recall": self.recall[c],
                    "f1": self.f1[c],
                    "support": self.support[c],
                }
                for c, name in enumerate(LABEL_NAMES)
            },
            "weighted": {
                "precision": self.weighted_precision,
                "recall": self.weighted_recall,
                "f1": self.weighted_f1,
            },
        }


def classification_metrics(cm) -> MetricsReport:
    cm = np.asarray(cm, dtype=float)
    total = cm.sum()
    if total < 1:
        raise EmptyMatrix("confusion matrix has zero samples")
    tp = np.diag(cm)
    support = cm.sum(axis=1)
    predicted = cm.sum(axis=0)

    precision = np.divide(tp, predicted, out=np.zeros(N_CLASSES), where=predicted > 0)
    recall = np.divide(tp, support, out=np.zeros(N_CLASSES), where=support > 0)
    denom = precision + recall
    f1 = np.divide(2 * precision * recall, denom, out=np.zeros(N_CLASSES), where=denom > 0)

    w = support / total
    return MetricsReport(
        accuracy=float(tp.sum() / total),
        precision=tuple(precision.tolist()),
        recall=tuple(recall.tolist()),
        f1=tuple(f1.tolist()),
        weighted_precision=float((w * precision).sum()),
        weighted_recall=float((w * recall).sum()),
        weighted_f1=float((w * f1).sum()),
        support=tuple(int(s) for s in support),
    )


def anova_f_scores(features, labels) -> np.ndarray:
    """One-way ANOVA F-value per feature column.

    F = [sum_k n_k (mean_k - mean)^2 / (K-1)] / [sum_k sum_i (x - mean_k)^2 / (N-K)].
    Perfect separators (zero within, positive between) get +inf; flat
    features get 0.
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels)
    classes = np.unique(y)
    if len(classes) < 2:
        raise InsufficientClassSize("ANOVA needs at least two classes")
    for c in classes:
        if (y == c).sum() < 2:
            raise InsufficientClassSize(f"class {c} needs at least two samples")

    n, _ = X.shape
    k = len(classes)
    grand = X.mean(axis=0)
    ssb = np.zeros(X.shape[1])
    ssw = np.zeros(X.shape[1])
    for c in classes:
        Xc = X[y == c]
        mean_c = Xc.mean(axis=0)
        ssb += len(Xc) * (mean_c - grand) ** 2
        ssw += ((Xc - mean_c) ** 2).sum(axis=0)

    msb = ssb / (k - 1)
    msw = ssw / (n - k)
    out = np.empty(X.shape[1])
    for j in range(X.shape[1]):
        if msw[j] > 0:
            out[j] = msb[j] / msw[j]
        else:
            out[j] = math.inf if msb[j] > 0 else 0.0
    return out


def rank_features(f_scores, names=None) -> list[tuple[str, float]]:
    """(name, F) pairs in descending F order; infinities first."""
    f = list(f_scores)
    if names is None:
        names = [f"f{i}" for i in range(len(f))]
    order = sorted(range(len(f)), key=lambda i: (-f[i], names[i]))
    return [(names[i], float(f[i])) for i in order]


def emit_report(report: MetricsReport, cm, ranking, out_dir) -> dict[str, Path]:
    """Write metrics.json, confusion.csv, feature_ranking.csv. Deterministic bytes."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    metrics_path = out_dir / "metrics.json"
    payload = report.to_dict()
    payload["confusion_matrix"] = np.asarray(cm).astype(int).tolist()
    metrics_path.write_text(
        json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )

    cm_path = out_dir / "confusion.csv"
    with cm_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["true\\predicted", *LABEL_NAMES])
        for name, row in zip(LABEL_NAMES, np.asarray(cm).astype(int)):
            writer.writerow([name, *row.tolist()])

    ranking_path = out_dir / "feature_ranking.csv"
    with ranking_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["rank", "feature", "anova_f"])
        for rank, (name, score) in enumerate(ranking, start=1):
            writer.writerow([rank, name, "inf" if math.isinf(score) else repr(score)])

    return {"metrics": metrics_path, "confusion": cm_path, "ranking": ranking_path}
