"""
Training the forest on the bundled sample
=========================================

Loads the 5,000-row sample CSV, trains the random forest with default
settings, and prints the held-out test metrics next to the logistic
regression baseline. Takes about half a minute.
"""

from importlib import resources

from passgauge import (
    TrainConfig,
    classification_metrics,  # noqa: F401  (re-exported for the curious)
    evaluate_pipeline,
    load_csv,
    train_pipeline,
)

# The sample ships inside the package; any password,strength CSV works.
with resources.as_file(
    resources.files("passgauge.data").joinpath("sample_5k.csv")
) as path:
    records, report = load_csv(path)

print(f"loaded {report.rows_kept} records "
      f"({report.malformed_skipped} malformed, {report.duplicates_removed} duplicates)")

# Random forest with the defaults used throughout: 100 trees, 500 n-gram
# columns, seed 42. The split is stratified 70/10/20.
rf, split = train_pipeline(records, TrainConfig(seed=42))
_, cm, rf_metrics = evaluate_pipeline(rf, records, split.test)

# Same data, same split, linear baseline.
lr, _ = train_pipeline(records, TrainConfig(model="logreg", seed=42), split=split)
_, _, lr_metrics = evaluate_pipeline(lr, records, split.test)

print(f"\ntest split: {len(split.test)} passwords")
print(f"{'':>16} {'forest':>8} {'logreg':>8}")
print(f"{'accuracy':>16} {rf_metrics.accuracy:8.4f} {lr_metrics.accuracy:8.4f}")
print(f"{'weighted F1':>16} {rf_metrics.weighted_f1:8.4f} {lr_metrics.weighted_f1:8.4f}")
print(f"{'weak recall':>16} {rf_metrics.recall[0]:8.4f} {lr_metrics.recall[0]:8.4f}")

print("\nconfusion matrix (rows true, columns predicted):")
for name, row in zip(("weak", "medium", "strong"), cm):
    print(f"  {name:>7} {row}")
