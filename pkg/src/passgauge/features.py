"""Hand-engineered password features.

All functions here are pure and total over arbitrary Unicode strings:
character-class counts, the 0..4 variety score, leetspeak-normalized
Shannon entropy, dynamic character-pool size, sequence/repeat detection,
and breached-dictionary matching.

Case handling: class counts, the variety score, and the pool size look at
the raw string (uppercase letters are a real signal); entropy, pattern
detection, and dictionary matching run on lowercased (and, where noted,
leet-normalized) text.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import EmptyDictionary

# 31 punctuation characters plus space: the 32-symbol special pool.
SPECIAL_POOL = "~!@#$%^&*()_+-={[]}|\\:;\"'<,>.?/ "

POOL_LOWER = 26
POOL_UPPER = 26
POOL_DIGIT = 10
POOL_SPECIAL = 32

# Predictable leetspeak substitutions, applied after lowercasing.
LEET_MAP = str.maketrans({
    "@": "a", "4": "a",
    "$": "s", "5": "s",
    "1": "l", "!": "l",
    "0": "o",
    "3": "e",
    "7": "t",
})

KEYBOARD_ROWS = ("qwertyuiop", "asdfghjkl", "zxcvbnm", "1234567890")

# Three identical characters in a row, or a block of >=2 repeated back to back.
_TRIPLE_RE = re.compile(r"(.)\1\1")
_BLOCK_RE = re.compile(r"(..+?)\1")

NUMERIC_FEATURE_NAMES = (
    "length",
    "n_lower",
    "n_upper",
    "n_digit",
    "n_special",
    "variety_score",
    "normalized_entropy",
    "charset_size",
    "has_sequence",
    "has_repeat",
    "dictionary_hit",
)


@dataclass(frozen=True)
class CharClassCounts:
    lower: int = 0
    upper: int = 0
    digit: int = 0
    special: int = 0
    other_non_ascii: int = 0
    length: int = 0


@dataclass(frozen=True)
class FeatureVector:
    """Numeric feature block for one password (n-gram block lives elsewhere)."""

    length: int
    n_lower: int
    n_upper: int
    n_digit: int
    n_special: int
    variety_score: int
    normalized_entropy: float
    charset_size: int
    has_sequence: bool
    has_repeat: bool
    dictionary_hit: bool
    dictionary_terms: tuple[str, ...] = field(default=())

    def as_list(self) -> list[float]:
        return [
            float(self.length),
            float(self.n_lower),
            float(self.n_upper),
            float(self.n_digit),
            float(self.n_special),
            float(self.variety_score),
            float(self.normalized_entropy),
            float(self.charset_size),
            float(self.has_sequence),
            float(self.has_repeat),
            float(self.dictionary_hit),
        ]


class BreachedDictionary:
    """Immutable lowercase term list used for substring matching."""

    def __init__(self, terms):
        seen = set()
        ordered = []
        for t in terms:
            t = t.strip().lower()
            if t and t not in seen:
                seen.add(t)
                ordered.append(t)
        self.terms: tuple[str, ...] = tuple(ordered)
        self.normalized_terms: tuple[tuple[str, str], ...] = tuple(
            (t, leet_normalize(t)) for t in self.terms
        )

    def __len__(self) -> int:
        return len(self.terms)

    @classmethod
    def from_file(cls, path) -> "BreachedDictionary":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(line for line in lines if not line.lstrip().startswith("#"))


def default_dictionary() -> BreachedDictionary:
    """The bundled top-breached-passwords list (197 terms)."""
    text = resources.files("passgauge.data").joinpath("breached_197.txt").read_text("utf-8")
    return BreachedDictionary(
        line for line in text.splitlines() if not line.lstrip().startswith("#")
    )


def char_class_counts(pw: str) -> CharClassCounts:
    lower = upper = digit = special = other = 0
    for ch in pw:
        if "a" <= ch <= "z":
            lower += 1
        elif "A" <= ch <= "Z":
            upper += 1
        elif "0" <= ch <= "9":
            digit += 1
        elif ch in SPECIAL_POOL:
            special += 1
        else:
            other += 1
    return CharClassCounts(lower, upper, digit, special, other, len(pw))


def variety_score(counts: CharClassCounts) -> int:
    """How many of the four character classes appear at least once."""
    return (
        (counts.lower > 0)
        + (counts.upper > 0)
        + (counts.digit > 0)
        + (counts.special > 0)
    )


def dynamic_charset_size(counts: CharClassCounts) -> int:
    """Sum of pool sizes (26/26/10/32) for the classes actually present."""
    return (
        POOL_LOWER * (counts.lower > 0)
        + POOL_UPPER * (counts.upper > 0)
        + POOL_DIGIT * (counts.digit > 0)
        + POOL_SPECIAL * (counts.special > 0)
    )


def leet_normalize(pw: str) -> str:
    """Lowercase, then undo common leetspeak substitutions (@->a, 0->o, ...)."""
    return pw.lower().translate(LEET_MAP)


def shannon_entropy(s: str) -> float:
    """Shannon entropy in bits of the codepoint frequency distribution."""
    n = len(s)
    if n == 0:
        return 0.0
    h = 0.0
    for count in Counter(s).values():
        p = count / n
        h -= p * math.log2(p)
    return h


def normalized_entropy(pw: str) -> float:
    """Entropy of the leet-normalized password: the anti-'P@ssw0rd' measure."""
    return shannon_entropy(leet_normalize(pw))


def _is_sequential_run(a: str, b: str, c: str) -> bool:
    for lo, hi in (("a", "z"), ("0", "9")):
        if lo <= a <= hi and lo <= b <= hi and lo <= c <= hi:
            step1, step2 = ord(b) - ord(a), ord(c) - ord(b)
            if step1 == step2 and step1 in (1, -1):
                return True
    return False


def detect_sequential(pw: str) -> bool:
    """True if the password contains an ascending/descending run or keyboard walk.

    Runs of length >=3 over a-z or 0-9, or any length-3 window of a QWERTY
    row read in either direction. Checked on the lowercased (not
    leet-normalized) string so digit sequences stay intact.
    """
    s = pw.lower()
    for i in range(len(s) - 2):
        window = s[i : i + 3]
        if _is_sequential_run(*window):
            return True
        for row in KEYBOARD_ROWS:
            if window in row or window in row[::-1]:
                return True
    return False


def detect_repeats(pw: str) -> bool:
    """True on a character tripled in place or any block of >=2 repeated back to back."""
    s = pw.lower()
    return bool(_TRIPLE_RE.search(s) or _BLOCK_RE.search(s))


def dictionary_match(pw: str, dictionary: BreachedDictionary) -> tuple[bool, tuple[str, ...]]:
    """Find breached terms inside the leet-normalized password.

    Both sides are compared leet-normalized, so '123456' still matches the
    term '123456' even though '1' rewrites to 'l'. Terms of length >=4 match
    by substring containment; shorter terms only by exact equality. Returns
    (hit, original terms sorted longest-first).
    """
    if len(dictionary) == 0:
        raise EmptyDictionary("dictionary has no terms")
    normalized = leet_normalize(pw)
    matches = [
        t
        for t, tn in dictionary.normalized_terms
        if (len(t) >= 4 and tn in normalized) or (len(t) < 4 and tn == normalized)
    ]
    matches.sort(key=lambda t: (-len(t), t))
    return bool(matches), tuple(matches)


def extract_features(pw: str, dictionary: BreachedDictionary) -> FeatureVector:
    """All numeric features for one password. Deterministic and total."""
    counts = char_class_counts(pw)
    hit, terms = dictionary_match(pw, dictionary)
    return FeatureVector(
        length=counts.length,
        n_lower=counts.lower,
        n_upper=counts.upper,
        n_digit=counts.digit,
        n_special=counts.special,
        variety_score=variety_score(counts),
        normalized_entropy=normalized_entropy(pw),
        charset_size=dynamic_charset_size(counts),
        has_sequence=detect_sequential(pw),
        has_repeat=detect_repeats(pw),
        dictionary_hit=hit,
        dictionary_terms=terms,
    )
