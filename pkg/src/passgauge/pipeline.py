"""End-to-end orchestration: training, persistence, and scoring.

A TrainedPipeline freezes everything scoring needs: the n-gram vocabulary,
scaler parameters, breached dictionary, the model itself, and training
metadata. Archives are gzip-compressed JSON with a payload checksum.
"""

from __future__ import annotations

import gzip
import hashlib
import json
import time
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import dataset, forest, linear, metrics, ngrams
from .dataset import DatasetSplit, PasswordRecord, ScalerParams, apply_scaler
from .errors import CorruptArchive, UnknownSchemaVersion
from .features import (
    NUMERIC_FEATURE_NAMES,
    BreachedDictionary,
    FeatureVector,
    default_dictionary,
    extract_features,
)
from .ngrams import NgramVocabulary

SCHEMA_VERSION = 1
LABEL_NAMES = ("weak", "medium", "strong")

# Severity order for recommendations; thresholds for the threshold-based issues.
MIN_LENGTH = 12
MIN_VARIETY = 4
MIN_ENTROPY_BITS = 2.5


@dataclass
class TrainConfig:
    model: str = "rf"  # "rf" or "logreg"
    n_trees: int = 100
    max_depth: int | None = None
    ngram_max_features: int = 500
    seed: int = 42
    smote_k: int = 5
    learning_rate: float = linear.DEFAULT_LEARNING_RATE
    epochs: int = linear.DEFAULT_EPOCHS
    l2: float = linear.DEFAULT_L2

    def to_dict(self) -> dict:
        return {
            "model": self.model,
            "n_trees": self.n_trees,
            "max_depth": self.max_depth,
            "ngram_max_features": self.ngram_max_features,
            "seed": self.seed,
            "smote_k": self.smote_k,
            "learning_rate": self.learning_rate,
            "epochs": self.epochs,
            "l2": self.l2,
        }


@dataclass
class TrainedPipeline:
    schema_version: int
    vocabulary: NgramVocabulary
    scaler: ScalerParams
    dictionary: BreachedDictionary
    model_type: str
    model: object
    label_names: tuple[str, ...]
    metadata: dict = field(default_factory=dict)

    @property
    def n_features(self) -> int:
        return len(NUMERIC_FEATURE_NAMES) + len(self.vocabulary)


def _dense_ngram(pw: str, vocab: NgramVocabulary) -> np.ndarray:
    vec = np.zeros(len(vocab))
    for col, w in ngrams.transform(pw, vocab).entries:
        vec[col] = w
    return vec


def build_matrices(passwords, dictionary, vocab):
    """Numeric block, dense n-gram block, and per-password FeatureVectors."""
    fvs = [extract_features(pw, dictionary) for pw in passwords]
    numeric = np.array([fv.as_list() for fv in fvs]) if fvs else np.zeros((0, len(NUMERIC_FEATURE_NAMES)))
    gram = np.array([_dense_ngram(pw, vocab) for pw in passwords]) if fvs else np.zeros((0, len(vocab)))
    return numeric, gram, fvs


def _feature_row(pipeline: TrainedPipeline, pw: str):
    fv = extract_features(pw, pipeline.dictionary)
    numeric = apply_scaler(np.array(fv.as_list()), pipeline.scaler)
    return np.concatenate([numeric, _dense_ngram(pw, pipeline.vocabulary)]), fv


def train_pipeline(records, config: TrainConfig | None = None, split: DatasetSplit | None = None,
                   dictionary: BreachedDictionary | None = None, data_hash: str = "",
                   grid_search: bool = False):
    """Train on the records' training split; returns (pipeline, split).

    Leakage-safe order: split, fit vocabulary and scaler on the training
    rows only, scale, SMOTE the scaled training block (synthetic rows copy
    their seed sample's n-gram block), then fit the model.
    """
    config = config or TrainConfig()
    dictionary = dictionary or default_dictionary()
    if split is None:
        split = dataset.stratified_split(records, seed=config.seed)

    train_pw = [records[i].password for i in split.train]
    train_y = np.array([records[i].label for i in split.train])

    vocab = ngrams.fit_vocabulary(train_pw, config.ngram_max_features)
    numeric, gram, _ = build_matrices(train_pw, dictionary, vocab)
    scaler = dataset.fit_scaler(numeric)
    numeric = apply_scaler(numeric, scaler)

    numeric, y, sources = dataset.smote_balance(
        numeric, train_y, k=config.smote_k, seed=config.seed
    )
    X = np.hstack([numeric, gram[sources]])

    grid_table = None
    if grid_search:
        from .tuning import DEFAULT_RF_GRID, grid_search_cv

        if config.model == "rf":
            result = grid_search_cv("rf", DEFAULT_RF_GRID, X, y, folds=5, seed=config.seed)
            config.n_trees = result.best_params["n_trees"]
            config.max_depth = result.best_params["max_depth"]
        else:
            grid = {"l2": [1e-4, 1e-3, 1e-2]}
            result = grid_search_cv("logreg", grid, X, y, folds=5, seed=config.seed)
            config.l2 = result.best_params["l2"]
        grid_table = result.table

    if config.model == "rf":
        model = forest.train_forest(
            X, y, n_trees=config.n_trees, max_depth=config.max_depth, master_seed=config.seed
        )
    elif config.model == "logreg":
        model = linear.train_logreg(
            X, y, learning_rate=config.learning_rate, epochs=config.epochs, l2=config.l2
        )
    else:
        raise ValueError(f"unknown model type {config.model!r}")

    metadata = {
        "config": config.to_dict(),
        "seed": config.seed,
        "data_hash": data_hash,
        "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "n_records": len(records),
        "n_train": len(split.train),
        "n_train_after_smote": int(len(y)),
        "feature_names": list(NUMERIC_FEATURE_NAMES),
        "n_ngram_features": len(vocab),
    }
    if grid_table is not None:
        metadata["grid_search"] = grid_table
    pipeline = TrainedPipeline(
        SCHEMA_VERSION, vocab, scaler, dictionary, config.model, model, LABEL_NAMES, metadata
    )
    return pipeline, split


def pipeline_predict(pipeline: TrainedPipeline, X):
    if pipeline.model_type == "rf":
        return forest.predict_proba(pipeline.model, X)
    return linear.predict_proba(pipeline.model, X)


def evaluate_pipeline(pipeline: TrainedPipeline, records, ids):
    """Predictions and metrics for the given record ids (typically the test split)."""
    passwords = [records[i].password for i in ids]
    y_true = np.array([records[i].label for i in ids])
    numeric, gram, _ = build_matrices(passwords, pipeline.dictionary, pipeline.vocabulary)
    X = np.hstack([apply_scaler(numeric, pipeline.scaler), gram])
    proba = pipeline_predict(pipeline, X)
    y_pred = np.argmax(proba, axis=1)
    cm = metrics.confusion_matrix(y_true, y_pred)
    return y_pred, cm, metrics.classification_metrics(cm)


def feature_ranking_for(records, ids, dictionary=None):
    """ANOVA F ranking of the numeric features over the given record ids."""
    dictionary = dictionary or default_dictionary()
    passwords = [records[i].password for i in ids]
    labels = [records[i].label for i in ids]
    fvs = [extract_features(pw, dictionary) for pw in passwords]
    numeric = np.array([fv.as_list() for fv in fvs])
    scores = metrics.anova_f_scores(numeric, labels)
    return metrics.rank_features(scores, list(NUMERIC_FEATURE_NAMES))


# --- persistence -----------------------------------------------------------


def _payload(pipeline: TrainedPipeline) -> dict:
    if pipeline.model_type == "rf":
        m = pipeline.model
        model_doc = {
            "trees": [forest.tree_to_flat(t) for t in m.trees],
            "n_features": m.n_features,
            "n_classes": m.n_classes,
            "n_trees": m.n_trees,
            "max_depth": m.max_depth,
            "master_seed": m.master_seed,
        }
    else:
        m = pipeline.model
        model_doc = {
            "weights": m.weights.tolist(),
            "bias": m.bias.tolist(),
            "l2": m.l2,
        }
    return {
        "vocabulary": {
            "triples": pipeline.vocabulary.to_triples(),
            "max_features": pipeline.vocabulary.max_features,
            "corpus_size": pipeline.vocabulary.corpus_size,
        },
        "scaler": {"mean": list(pipeline.scaler.mean), "std": list(pipeline.scaler.std)},
        "dictionary": list(pipeline.dictionary.terms),
        "model_type": pipeline.model_type,
        "model": model_doc,
        "label_names": list(pipeline.label_names),
        "metadata": pipeline.metadata,
    }


def save_pipeline(pipeline: TrainedPipeline, path) -> None:
    payload = _payload(pipeline)
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    doc = {
        "schema_version": pipeline.schema_version,
        "checksum": hashlib.sha256(blob.encode("utf-8")).hexdigest(),
        "payload": payload,
    }
    data = gzip.compress(json.dumps(doc, sort_keys=True).encode("utf-8"), mtime=0)
    Path(path).write_bytes(data)


def load_pipeline(path) -> TrainedPipeline:
    try:
        doc = json.loads(gzip.decompress(Path(path).read_bytes()))
    except (OSError, EOFError, ValueError) as exc:
        if isinstance(exc, FileNotFoundError):
            raise
        raise CorruptArchive(f"{path}: {exc}") from exc
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise UnknownSchemaVersion(f"{path}: schema version {version!r}")
    payload = doc["payload"]
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if hashlib.sha256(blob.encode("utf-8")).hexdigest() != doc.get("checksum"):
        raise CorruptArchive(f"{path}: checksum mismatch")

    v = payload["vocabulary"]
    vocab = NgramVocabulary.from_triples(v["triples"], v["max_features"], v["corpus_size"])
    scaler = ScalerParams(tuple(payload["scaler"]["mean"]), tuple(payload["scaler"]["std"]))
    dictionary = BreachedDictionary(payload["dictionary"])
    m = payload["model"]
    if payload["model_type"] == "rf":
        model = forest.RandomForestModel(
            [forest.tree_from_flat(t) for t in m["trees"]],
            n_features=m["n_features"],
            n_classes=m["n_classes"],
            n_trees=m["n_trees"],
            max_depth=m["max_depth"],
            master_seed=m["master_seed"],
        )
    else:
        model = linear.LogisticRegressionModel(
            np.array(m["weights"]), np.array(m["bias"]), m["l2"]
        )
    return TrainedPipeline(
        version, vocab, scaler, dictionary, payload["model_type"], model,
        tuple(payload["label_names"]), payload["metadata"],
    )


# --- scoring ---------------------------------------------------------------


def _load_catalog() -> dict:
    text = resources.files("passgauge.data").joinpath("recommendations.json").read_text("utf-8")
    return json.loads(text)


_CATALOG = None


def _catalog() -> dict:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _load_catalog()
    return _CATALOG


def detect_issues(fv: FeatureVector) -> list[str]:
    """Triggered weaknesses, in severity order."""
    issues = []
    if fv.dictionary_hit:
        issues.append("dictionary_hit")
    if fv.has_sequence:
        issues.append("sequence")
    if fv.has_repeat:
        issues.append("repeat")
    if fv.length < MIN_LENGTH:
        issues.append("short")
    if fv.variety_score < MIN_VARIETY:
        issues.append("low_variety")
    if fv.normalized_entropy < MIN_ENTROPY_BITS:
        issues.append("low_entropy")
    return issues


def build_recommendations(fv: FeatureVector, issues=None) -> list[str]:
    """Render the catalog messages for the triggered issues, severity first."""
    if issues is None:
        issues = detect_issues(fv)
    fills = {
        "term": fv.dictionary_terms[0] if fv.dictionary_terms else "",
        "length": fv.length,
        "variety": fv.variety_score,
        "entropy": f"{fv.normalized_entropy:.2f}",
    }
    out = []
    for rule in _catalog()["rules"]:
        if rule["issue"] in issues:
            out.append(rule["message"].format(**fills))
    return out


@dataclass(frozen=True)
class ScoreResult:
    class_id: int
    class_name: str
    probabilities: tuple[float, ...]
    diagnostics: dict
    issues: tuple[str, ...]
    recommendations: tuple[str, ...]
    latency_ms: float

    def to_dict(self) -> dict:
        return {
            "class_id": self.class_id,
            "class_name": self.class_name,
            "probabilities": {
                name: p for name, p in zip(LABEL_NAMES, self.probabilities)
            },
            "diagnostics": self.diagnostics,
            "issues": list(self.issues),
            "recommendations": list(self.recommendations),
            "latency_ms": self.latency_ms,
        }


def score_password(pipeline: TrainedPipeline, raw: str) -> ScoreResult:
    """Score one password. Total over all strings; never raises on input."""
    t0 = time.perf_counter()
    x, fv = _feature_row(pipeline, raw)
    proba = pipeline_predict(pipeline, x)[0]
    class_id = int(np.argmax(proba))
    issues = detect_issues(fv)
    recs = build_recommendations(fv, issues)
    if class_id != 2 and not recs:
        recs = [_catalog()["fallback"]]
    diagnostics = dict(zip(NUMERIC_FEATURE_NAMES, fv.as_list()))
    diagnostics["dictionary_terms"] = list(fv.dictionary_terms)
    return ScoreResult(
        class_id=class_id,
        class_name=pipeline.label_names[class_id],
        probabilities=tuple(float(p) for p in proba),
        diagnostics=diagnostics,
        issues=tuple(issues),
        recommendations=tuple(recs),
        latency_ms=(time.perf_counter() - t0) * 1000.0,
    )
