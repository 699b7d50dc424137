"""CART decision trees and a Gini-impurity random forest, from scratch.

Split search is deterministic: candidate features are drawn per node
without replacement, thresholds sit at midpoints between consecutive
sorted unique values, and ties go to the lowest feature id then the lowest
threshold. Each tree gets its own PRNG seeded from (master_seed, tree
index), so the ensemble is independent of training order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AllZeroCounts, DimensionMismatch, SingleClassTrainingSet

N_CLASSES = 3


def gini_impurity(class_counts) -> float:
    counts = np.asarray(class_counts, dtype=float)
    total = counts.sum()
    if total <= 0:
        raise AllZeroCounts("gini impurity of an empty histogram is undefined")
    p = counts / total
    return float(1.0 - (p * p).sum())


@dataclass
class TreeNode:
    n_samples: int
    impurity: float
    # Internal nodes: feature/threshold/children set. Leaves: histogram set.
    feature: int = -1
    threshold: float = 0.0
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    histogram: "np.ndarray | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.histogram is not None


def _best_split(X, y, candidates, parent_gini, n_classes):
    """Best (feature, threshold, weighted child impurity) over the candidates.

    Candidates are scanned in ascending feature id and thresholds in
    ascending order with strictly-greater comparisons, which realizes the
    tie-break rule for free.
    """
    n = len(y)
    onehot = np.zeros((n, n_classes))
    best = None  # (decrease, feature, threshold, child_impurity)
    for f in candidates:
        v = X[:, f]
        order = np.argsort(v, kind="stable")
        sv = v[order]
        onehot[:] = 0.0
        onehot[np.arange(n), y[order]] = 1.0
        cum = onehot.cumsum(axis=0)
        boundaries = np.flatnonzero(sv[1:] > sv[:-1])
        if boundaries.size == 0:
            continue
        left = cum[boundaries]
        total = cum[-1]
        right = total - left
        nl = (boundaries + 1).astype(float)
        nr = n - nl
        gl = 1.0 - (left * left).sum(axis=1) / (nl * nl)
        gr = 1.0 - (right * right).sum(axis=1) / (nr * nr)
        child = (nl * gl + nr * gr) / n
        # Tolerance keeps fp noise from overriding the lowest-threshold,
        # lowest-feature tie-break on mathematically equal impurities.
        i = int(np.argmax(child <= child.min() + 1e-12))
        decrease = parent_gini - child[i]
        if best is None or decrease > best[0] + 1e-12:
            threshold = (sv[boundaries[i]] + sv[boundaries[i] + 1]) / 2.0
            best = (decrease, int(f), float(threshold), float(child[i]))
    return best


def train_tree(
    X,
    y,
    feature_subsample: int | None = None,
    max_depth: int | None = None,
    min_samples_split: int = 2,
    rng: np.random.Generator | None = None,
    n_classes: int = N_CLASSES,
) -> TreeNode:
    """Grow a CART tree with Gini best-splits on (optionally) subsampled features."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if len(y) < 1:
        raise ValueError("need at least one sample")
    d = X.shape[1]
    if feature_subsample is None:
        feature_subsample = d
    feature_subsample = min(feature_subsample, d)
    if rng is None:
        rng = np.random.default_rng(0)

    def grow(idx, depth) -> TreeNode:
        labels = y[idx]
        hist = np.bincount(labels, minlength=n_classes).astype(float)
        impurity = gini_impurity(hist)
        node = TreeNode(n_samples=len(idx), impurity=impurity)
        if (
            impurity == 0.0
            or (max_depth is not None and depth >= max_depth)
            or len(idx) < min_samples_split
        ):
            node.histogram = hist
            return node
        if feature_subsample < d:
            candidates = np.sort(rng.choice(d, size=feature_subsample, replace=False))
        else:
            candidates = np.arange(d)
        best = _best_split(X[idx], labels, candidates, impurity, n_classes)
        if best is None or best[0] <= 0.0:
            node.histogram = hist
            return node
        _, node.feature, node.threshold, _ = best
        mask = X[idx, node.feature] <= node.threshold
        node.left = grow(idx[mask], depth + 1)
        node.right = grow(idx[~mask], depth + 1)
        return node

    return grow(np.arange(len(y)), 0)


@dataclass
class RandomForestModel:
    trees: list[TreeNode]
    n_features: int
    n_classes: int = N_CLASSES
    n_trees: int = 100
    max_depth: int | None = None
    master_seed: int = 42


def train_forest(
    X,
    y,
    n_trees: int = 100,
    max_depth: int | None = None,
    master_seed: int = 42,
    min_samples_split: int = 2,
    bootstrap: bool = True,
    feature_subsample: int | None = None,
) -> RandomForestModel:
    """Bagged CART ensemble; tree t is seeded from (master_seed, t)."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    if len(np.unique(y)) < 2:
        raise SingleClassTrainingSet("training set contains a single class")
    n, d = X.shape
    if feature_subsample is None:
        feature_subsample = math.ceil(math.sqrt(d))
    trees = []
    for t in range(n_trees):
        rng = np.random.default_rng([master_seed, t])
        idx = rng.integers(0, n, size=n) if bootstrap else np.arange(n)
        trees.append(
            train_tree(
                X[idx],
                y[idx],
                feature_subsample=feature_subsample,
                max_depth=max_depth,
                min_samples_split=min_samples_split,
                rng=rng,
            )
        )
    return RandomForestModel(
        trees, n_features=d, n_trees=n_trees, max_depth=max_depth, master_seed=master_seed
    )


def _leaf_for(node: TreeNode, x) -> TreeNode:
    while not node.is_leaf:
        node = node.left if x[node.feature] <= node.threshold else node.right
    return node


def predict_proba(model: RandomForestModel, X):
    """Mean over trees of the normalized leaf histograms."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[1] != model.n_features:
        raise DimensionMismatch(
            f"expected {model.n_features} features, got {X.shape[1]}"
        )
    out = np.zeros((len(X), model.n_classes))
    for tree in model.trees:
        for i, x in enumerate(X):
            hist = _leaf_for(tree, x).histogram
            out[i] += hist / hist.sum()
    return out / len(model.trees)


def predict_class(model: RandomForestModel, X):
    """Argmax class; ties resolve toward the lower (weaker) class id."""
    return np.argmax(predict_proba(model, X), axis=1)


def feature_importance(model: RandomForestModel):
    """Sample-count-weighted mean decrease in Gini impurity, normalized to sum 1."""
    imp = np.zeros(model.n_features)

    def walk(node: TreeNode):
        if node.is_leaf:
            return
        child = (
            node.left.n_samples * node.left.impurity
            + node.right.n_samples * node.right.impurity
        ) / node.n_samples
        imp[node.feature] += node.n_samples * (node.impurity - child)
        walk(node.left)
        walk(node.right)

    for tree in model.trees:
        walk(tree)
    total = imp.sum()
    return imp / total if total > 0 else imp


def tree_to_flat(root: TreeNode) -> list[list]:
    """Breadth-first node list for serialization."""
    from collections import deque

    nodes = []
    queue = deque([root])
    ids = {id(root): 0}
    while queue:
        node = queue.popleft()
        if node.is_leaf:
            nodes.append([-1, 0.0, -1, -1, [float(v) for v in node.histogram]])
        else:
            for child in (node.left, node.right):
                ids[id(child)] = len(ids)
                queue.append(child)
            nodes.append(
                [node.feature, node.threshold, ids[id(node.left)], ids[id(node.right)], None]
            )
    return nodes


def tree_from_flat(flat: list[list]) -> TreeNode:
    nodes = []
    for feature, threshold, _, _, hist in flat:
        if hist is not None:
            h = np.array(hist, dtype=float)
            nodes.append(TreeNode(n_samples=int(h.sum()), impurity=0.0, histogram=h))
        else:
            nodes.append(TreeNode(n_samples=0, impurity=0.0, feature=int(feature), threshold=float(threshold)))
    for node, (_, _, li, ri, hist) in zip(nodes, flat):
        if hist is None:
            node.left = nodes[li]
            node.right = nodes[ri]
    return nodes[0]
