"""
What the feature extractor sees in a password
==============================================

Walks a handful of passwords through the hand-engineered features:
character-class counts, the 0..4 variety score, leet-normalized Shannon
entropy, the dynamic charset size, and the pattern detectors.
"""

from passgauge import default_dictionary, extract_features
from passgauge.features import leet_normalize

dictionary = default_dictionary()
print(f"breached dictionary: {len(dictionary)} terms\n")

# A classic progression from terrible to decent.
candidates = [
    "password",
    "Password123",
    "P@ssw0rd!",
    "correct horse battery staple",
    "Zq8#Kv!mW4x&Tz9p",
]

for pw in candidates:
    fv = extract_features(pw, dictionary)
    print(f"{pw!r}")
    print(f"  normalized form   {leet_normalize(pw)!r}")
    print(f"  classes           {fv.n_lower} lower / {fv.n_upper} upper / "
          f"{fv.n_digit} digit / {fv.n_special} special")
    print(f"  variety score     {fv.variety_score} of 4")
    print(f"  entropy           {fv.normalized_entropy:.3f} bits")
    print(f"  charset size      {fv.charset_size}")
    flags = [name for name, on in [
        ("sequence", fv.has_sequence),
        ("repeat", fv.has_repeat),
        ("dictionary", fv.dictionary_hit),
    ] if on]
    print(f"  pattern flags     {', '.join(flags) or 'none'}")
    if fv.dictionary_terms:
        print(f"  matched terms     {', '.join(fv.dictionary_terms)}")
    print()

# Leet tricks do not move the entropy needle: "P@ssw0rd" normalizes back
# to "password", so both score the same entropy.
a = extract_features("password", dictionary).normalized_entropy
b = extract_features("P@ssw0rd", dictionary).normalized_entropy
print(f"entropy('password') = {a:.3f}, entropy('P@ssw0rd') = {b:.3f}")
