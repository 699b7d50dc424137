"""Dataset ingestion, stratified splitting, SMOTE balancing, and scaling.

The leakage-safe order of operations is fixed: split first, fit the n-gram
vocabulary and scaler on training data only, then SMOTE the scaled training
block. Validation and test rows are never oversampled.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    DegenerateClass,
    EmptyTrainingSet,
    HeaderMismatch,
    InsufficientClassSize,
)

EXPECTED_HEADER = ["password", "strength"]
LABELS = (0, 1, 2)
LABEL_NAMES = ("weak", "medium", "strong")
DEFAULT_FRACTIONS = (0.70, 0.10, 0.20)


@dataclass(frozen=True)
class PasswordRecord:
    password: str
    label: int


@dataclass
class IngestReport:
    rows_read: int = 0
    duplicates_removed: int = 0
    nulls_removed: int = 0
    malformed_skipped: int = 0
    rows_kept: int = 0
    label_conflicts: int = 0
    class_histogram: dict[int, int] = field(default_factory=lambda: {c: 0 for c in LABELS})

    def to_dict(self) -> dict:
        return {
            "rows_read": self.rows_read,
            "duplicates_removed": self.duplicates_removed,
            "nulls_removed": self.nulls_removed,
            "malformed_skipped": self.malformed_skipped,
            "rows_kept": self.rows_kept,
            "label_conflicts": self.label_conflicts,
            "class_histogram": {str(c): n for c, n in sorted(self.class_histogram.items())},
        }


def load_csv(path) -> tuple[list[PasswordRecord], IngestReport]:
    """Parse a "password,strength" CSV, dropping nulls, dupes, and bad rows."""
    path = Path(path)
    report = IngestReport()
    records: list[PasswordRecord] = []
    seen_pairs: set[tuple[str, int]] = set()
    label_by_password: dict[str, int] = {}

    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise HeaderMismatch(f"{path}: empty file") from None
        if header != EXPECTED_HEADER:
            raise HeaderMismatch(f"{path}: expected header {EXPECTED_HEADER!r}, got {header!r}")

        while True:
            try:
                row = next(reader)
            except StopIteration:
                break
            except csv.Error:
                report.rows_read += 1
                report.malformed_skipped += 1
                continue
            report.rows_read += 1
            if len(row) != 2:
                report.malformed_skipped += 1
                continue
            password, raw_label = row
            try:
                label = int(raw_label)
            except ValueError:
                report.malformed_skipped += 1
                continue
            if label not in LABELS:
                report.malformed_skipped += 1
                continue
            if password == "":
                report.nulls_removed += 1
                continue
            if (password, label) in seen_pairs:
                report.duplicates_removed += 1
                continue
            seen_pairs.add((password, label))
            prior = label_by_password.get(password)
            if prior is not None and prior != label:
                report.label_conflicts += 1
            label_by_password.setdefault(password, label)
            records.append(PasswordRecord(password, label))
            report.rows_kept += 1
            report.class_histogram[label] += 1

    return records, report


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[int, ...]
    validation: tuple[int, ...]
    test: tuple[int, ...]
    seed: int


def _largest_remainder(n: int, fractions) -> list[int]:
    raw = [f * n for f in fractions]
    base = [int(x) for x in raw]
    leftover = n - sum(base)
    order = sorted(range(len(fractions)), key=lambda i: (-(raw[i] - base[i]), i))
    for i in order[:leftover]:
        base[i] += 1
    return base


def stratified_split(records, fractions=DEFAULT_FRACTIONS, seed: int = 42) -> DatasetSplit:
    """Deterministic per-class shuffle + largest-remainder partition."""
    if abs(sum(fractions) - 1.0) > 1e-9:
        raise ValueError(f"fractions must sum to 1, got {fractions}")
    by_class: dict[int, list[int]] = {}
    for i, rec in enumerate(records):
        by_class.setdefault(rec.label, []).append(i)
    for c, ids in by_class.items():
        if len(ids) < 3:
            raise InsufficientClassSize(f"class {c} has only {len(ids)} records")

    parts: list[list[int]] = [[], [], []]
    for c in sorted(by_class):
        ids = np.array(by_class[c])
        rng = np.random.default_rng([seed, c])
        ids = ids[rng.permutation(len(ids))]
        counts = _largest_remainder(len(ids), fractions)
        start = 0
        for part, count in zip(parts, counts):
            part.extend(int(i) for i in ids[start : start + count])
            start += count
    return DatasetSplit(tuple(parts[0]), tuple(parts[1]), tuple(parts[2]), seed)


def smote_balance(features, labels, k: int = 5, seed: int = 42):
    """Oversample minority classes to the majority count.

    Synthetic rows are x + u * (nn - x) with u ~ U[0,1), nn one of x's k
    nearest same-class neighbors (k clamped for tiny classes). Returns
    (features, labels, sources): sources[i] is the index of the seed sample
    a synthetic row interpolates from (own index for original rows), so the
    caller can copy non-interpolatable blocks such as n-gram vectors.
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels)
    n = len(y)
    classes, counts = np.unique(y, return_counts=True)
    majority = int(counts.max())

    new_rows = []
    new_labels = []
    new_sources = []
    for c, count in zip(classes, counts):
        need = majority - int(count)
        if need == 0:
            continue
        if count < 2:
            raise DegenerateClass(f"class {c} has a single sample; cannot interpolate")
        idx = np.flatnonzero(y == c)
        Xc = X[idx]
        # Pairwise squared distances via the gram matrix; self excluded.
        sq = (Xc * Xc).sum(axis=1)
        d = sq[:, None] + sq[None, :] - 2.0 * (Xc @ Xc.T)
        np.fill_diagonal(d, np.inf)
        k_eff = min(k, len(idx) - 1)
        nn = np.argsort(d, axis=1)[:, :k_eff]

        rng = np.random.default_rng([seed, int(c)])
        for _ in range(need):
            a = int(rng.integers(len(idx)))
            b = int(nn[a][int(rng.integers(k_eff))])
            u = rng.random()
            new_rows.append(Xc[a] + u * (Xc[b] - Xc[a]))
            new_labels.append(c)
            new_sources.append(int(idx[a]))

    sources = list(range(n)) + new_sources
    if new_rows:
        X = np.vstack([X, np.array(new_rows)])
        y = np.concatenate([y, np.array(new_labels, dtype=y.dtype)])
    return X, y, np.array(sources)


@dataclass(frozen=True)
class ScalerParams:
    mean: tuple[float, ...]
    std: tuple[float, ...]  # population std; 0 marks a constant feature


def fit_scaler(features) -> ScalerParams:
    X = np.asarray(features, dtype=float)
    if X.size == 0:
        raise EmptyTrainingSet("cannot fit a scaler on zero samples")
    mean = X.mean(axis=0)
    std = X.std(axis=0)  # ddof=0
    return ScalerParams(tuple(mean.tolist()), tuple(std.tolist()))


def apply_scaler(features, params: ScalerParams):
    """Z-score each column; constant columns map to 0."""
    X = np.asarray(features, dtype=float)
    mean = np.array(params.mean)
    std = np.array(params.std)
    safe = np.where(std > 0, std, 1.0)
    Z = (X - mean) / safe
    Z[..., std == 0] = 0.0
    return Z
