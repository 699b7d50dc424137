"""
Scoring passwords and generating advice
=======================================

Trains a small forest (fast, a few seconds), saves it, loads it back the
way the CLI and the HTTP service do, and scores a few passwords with full
diagnostics and recommendations.
"""

import tempfile
from importlib import resources
from pathlib import Path

from passgauge import (
    TrainConfig,
    load_csv,
    load_pipeline,
    save_pipeline,
    score_password,
    train_pipeline,
)

with resources.as_file(
    resources.files("passgauge.data").joinpath("sample_5k.csv")
) as path:
    records, _ = load_csv(path)

# Smaller forest than the defaults so the demo stays snappy.
trained, _ = train_pipeline(records, TrainConfig(n_trees=25, seed=42))

# Archives are gzip JSON with a checksum; save and reload to prove the
# round trip changes nothing.
with tempfile.TemporaryDirectory() as tmp:
    archive = Path(tmp) / "meter.pgz"
    save_pipeline(trained, archive)
    print(f"archive: {archive.stat().st_size / 1024:.0f} KiB on disk\n")
    trained = load_pipeline(archive)

for pw in ["123456", "P@ssword123!", "plum-Ferry-9!throat"]:
    result = score_password(trained, pw)
    probs = ", ".join(
        f"{k} {v:.2f}" for k, v in result.to_dict()["probabilities"].items()
    )
    print(f"{pw!r} -> {result.class_name}  ({probs})")
    for issue in result.issues:
        print(f"  issue: {issue}")
    for rec in result.recommendations:
        print(f"  advice: {rec}")
    print(f"  scored in {result.latency_ms:.2f} ms\n")
