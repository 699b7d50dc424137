"""Regenerate the bundled desk-scale dataset (src/passgauge/data/sample_5k.csv).

The full 669k-password corpus is an external download, so the repo ships a
deterministic synthetic sample that mirrors its structure: weak rows are
breached-list terms and short low-variety strings, medium rows are the
typical lowercase+digit passwords (including mangled dictionary roots that
look strong to length-based checkers), strong rows are long high-variety
random strings. Class proportions follow the real corpus (~23.3/64.5/12.2).
Raw per-class character counts are deliberately noisy, as in real leaks;
composite features (variety, normalized entropy) carry the signal.

Run: python3 scripts/make_sample.py
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "passgauge" / "data" / "sample_5k.csv"
DICT = ROOT / "src" / "passgauge" / "data" / "breached_197.txt"

LOWER = "abcdefghijklmnopqrstuvwxyz"
UPPER = LOWER.upper()
DIGIT = "0123456789"
SPECIAL = "!@#$%^&*()_+-=?."

COUNTS = {0: 1165, 1: 3225, 2: 610}
SEED = 20240901

LEET = {"a": "@", "s": "$", "o": "0", "e": "3", "i": "1", "l": "1", "t": "7"}


def pick(rng, alphabet, n):
    return "".join(alphabet[i] for i in rng.integers(0, len(alphabet), size=n))


def shuffle_str(rng, s):
    order = rng.permutation(len(s))
    return "".join(s[i] for i in order)


def weak(rng, terms):
    r = rng.random()
    if r < 0.45:
        base = terms[int(rng.integers(len(terms)))]
        if rng.random() < 0.25:
            base = base.capitalize()
        if rng.random() < 0.30:
            base += pick(rng, DIGIT, int(rng.integers(1, 3)))
        if rng.random() < 0.10:
            base += pick(rng, SPECIAL, 1)
        return base
    if r < 0.70:
        return pick(rng, LOWER, int(rng.integers(4, 8)))
    if r < 0.80:
        start = int(rng.integers(0, 5))
        return "".join(str((start + i) % 10) for i in range(int(rng.integers(4, 8))))
    return pick(rng, LOWER + DIGIT, int(rng.integers(5, 8)))


def medium(rng, terms):
    r = rng.random()
    n = int(rng.integers(8, 14))
    if r < 0.35:
        # The archetypal medium password: lowercase plus digits.
        nd = int(rng.integers(2, 5))
        return pick(rng, LOWER, n - nd) + pick(rng, DIGIT, nd)
    if r < 0.60:
        # Some uppercase mixed in.
        nu = int(rng.integers(1, 5))
        nd = int(rng.integers(1, 4))
        return shuffle_str(rng, pick(rng, UPPER, nu) + pick(rng, LOWER, n - nu - nd)) + pick(rng, DIGIT, nd)
    if r < 0.75:
        # Specials instead of uppercase.
        ns = int(rng.integers(1, 4))
        nd = int(rng.integers(1, 3))
        return pick(rng, LOWER, n - ns - nd) + pick(rng, SPECIAL, ns) + pick(rng, DIGIT, nd)
    if r < 0.85:
        # Mangled dictionary root: long and varied but semantically weak.
        base = terms[int(rng.integers(len(terms)))]
        while len(base) < 6:
            base = terms[int(rng.integers(len(terms)))]
        word = base.capitalize() if rng.random() < 0.5 else base
        if rng.random() < 0.5:
            word = "".join(LEET.get(c, c) if rng.random() < 0.4 else c for c in word)
        suffix = pick(rng, DIGIT, int(rng.integers(3, 6)))
        if rng.random() < 0.4:
            suffix += pick(rng, SPECIAL, 1)
        return word + suffix
    # Longer lowercase-only passphrase-ish strings.
    return pick(rng, LOWER, int(rng.integers(10, 15)))


def strong(rng):
    n = int(rng.integers(14, 21))
    nu = int(rng.integers(1, 5))
    nd = int(rng.integers(1, 5))
    ns = int(rng.integers(1, 5))
    nl = max(n - nu - nd - ns, 2)
    s = pick(rng, LOWER, nl) + pick(rng, UPPER, nu) + pick(rng, DIGIT, nd) + pick(rng, SPECIAL, ns)
    return shuffle_str(rng, s)


def main():
    terms = [
        line.strip()
        for line in DICT.read_text("utf-8").splitlines()
        if line.strip() and not line.startswith("#")
    ]
    rng = np.random.default_rng(SEED)
    rows = []
    seen = set()
    for label, count in COUNTS.items():
        made = 0
        while made < count:
            if label == 0:
                pw = weak(rng, terms)
            elif label == 1:
                pw = medium(rng, terms)
            else:
                pw = strong(rng)
            if (pw, label) in seen or pw == "":
                continue
            seen.add((pw, label))
            rows.append((pw, label))
            made += 1

    order = rng.permutation(len(rows))
    with OUT.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["password", "strength"])
        for i in order:
            writer.writerow(rows[i])
    print(f"wrote {OUT} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
