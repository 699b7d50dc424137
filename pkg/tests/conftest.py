import csv
from importlib import resources

import pytest

from passgauge import dataset, pipeline

SAMPLE = resources.files("passgauge.data").joinpath("sample_5k.csv")


@pytest.fixture(scope="session")
def sample_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "sample_5k.csv"
    path.write_bytes(SAMPLE.read_bytes())
    return path


@pytest.fixture(scope="session")
def small_csv(tmp_path_factory, sample_path):
    """A 450-record stratified slice of the bundled sample, for fast tests."""
    records, _ = dataset.load_csv(sample_path)
    by_class = {0: [], 1: [], 2: []}
    for r in records:
        if len(by_class[r.label]) < 150:
            by_class[r.label].append(r)
    path = tmp_path_factory.mktemp("data") / "small.csv"
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["password", "strength"])
        for rows in by_class.values():
            for r in rows:
                writer.writerow([r.password, r.label])
    return path


@pytest.fixture(scope="session")
def small_config():
    return pipeline.TrainConfig(n_trees=15, ngram_max_features=100, seed=7)


@pytest.fixture(scope="session")
def small_pipeline(small_csv, small_config):
    records, _ = dataset.load_csv(small_csv)
    trained, split = pipeline.train_pipeline(records, small_config)
    return trained, split, records
