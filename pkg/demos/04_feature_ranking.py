"""
Which features carry the signal?
================================

One-way ANOVA F-values of the eleven numeric features over the bundled
sample. Higher F means the feature's class means are farther apart
relative to within-class spread. Entropy and the variety score should top
the raw character counts.
"""

from importlib import resources

from passgauge import load_csv
from passgauge.pipeline import feature_ranking_for

with resources.as_file(
    resources.files("passgauge.data").joinpath("sample_5k.csv")
) as path:
    records, _ = load_csv(path)

ranking = feature_ranking_for(records, range(len(records)))

print(f"{'rank':>4}  {'feature':<20} {'ANOVA F':>12}")
for rank, (name, score) in enumerate(ranking, start=1):
    print(f"{rank:>4}  {name:<20} {score:>12.1f}")

counts = {"n_lower", "n_upper", "n_digit", "n_special"}
first_count = next(i for i, (n, _) in enumerate(ranking) if n in counts)
above = [n for n, _ in ranking[:first_count]]
print(f"\nranked above every raw count: {', '.join(above)}")
