"""Grid search over model hyperparameters with stratified k-fold CV."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import forest, linear
from .errors import InsufficientClassSize

DEFAULT_RF_GRID = {"n_trees": [50, 100], "max_depth": [None, 20]}


def stratified_folds(y, folds: int, seed: int):
    """Per-class shuffle, then round-robin fold assignment. Deterministic."""
    y = np.asarray(y)
    if folds < 2:
        raise ValueError("folds must be >= 2")
    assignment = np.empty(len(y), dtype=int)
    for c in np.unique(y):
        idx = np.flatnonzero(y == c)
        if len(idx) < folds:
            raise InsufficientClassSize(f"class {c} has {len(idx)} < {folds} samples")
        rng = np.random.default_rng([seed, int(c)])
        idx = idx[rng.permutation(len(idx))]
        assignment[idx] = np.arange(len(idx)) % folds
    return assignment


def _model_size_key(params: dict):
    # Smaller-model preference: fewer trees, then shallower depth.
    depth = params.get("max_depth")
    return (
        params.get("n_trees", 0),
        math.inf if depth is None else depth,
        sorted(params.items(), key=lambda kv: kv[0], reverse=False).__repr__(),
    )


@dataclass(frozen=True)
class GridSearchResult:
    best_params: dict
    table: list[dict]  # one row per cell: params + mean_accuracy


def grid_search_cv(family: str, grid: dict, X, y, folds: int = 5, seed: int = 42) -> GridSearchResult:
    """Mean CV accuracy per grid cell; best cell wins, ties go to the smaller model.

    family is "rf" or "logreg"; grid maps parameter name to a list of values
    and is expanded as a Cartesian product in declaration order.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if not grid:
        raise ValueError("grid must contain at least one parameter")
    assignment = stratified_folds(y, folds, seed)

    names = list(grid)
    cells = [dict(zip(names, combo)) for combo in itertools.product(*(grid[n] for n in names))]

    table = []
    for params in cells:
        accs = []
        for fold in range(folds):
            val = assignment == fold
            if family == "rf":
                model = forest.train_forest(X[~val], y[~val], master_seed=seed, **params)
                pred = forest.predict_class(model, X[val])
            elif family == "logreg":
                model = linear.train_logreg(X[~val], y[~val], **params)
                pred = linear.predict_class(model, X[val])
            else:
                raise ValueError(f"unknown model family {family!r}")
            accs.append(float((pred == y[val]).mean()))
        table.append({"params": params, "mean_accuracy": float(np.mean(accs))})

    best = max(
        table,
        key=lambda row: (row["mean_accuracy"],),
    )
    # Resolve exact ties toward the smaller model.
    tied = [row for row in table if row["mean_accuracy"] == best["mean_accuracy"]]
    best = min(tied, key=lambda row: _model_size_key(row["params"]))
    return GridSearchResult(best["params"], table)
