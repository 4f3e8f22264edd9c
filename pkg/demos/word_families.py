#!/usr/bin/env python3
"""The objects behind the numbers: binary words with bounded ascents,
ascent sequences, pattern avoiders, and restricted subsets.

Run: python demos/word_families.py
"""

from rascal import (
    ascent_sequences,
    avoiders,
    canonical_avoiders,
    rascal_value,
    restricted_subsets,
    words_with_ascents,
    word_str,
)

print("=" * 64)
print("Binary words: length 6, four 1's, at most one ascent")
print("=" * 64)
family = [word_str(w) for w in words_with_ascents(6, 4, 1)]
print(" ", ", ".join(family))
print("  count =", len(family), "= R(6, 4) =", rascal_value(6, 4))

print()
print("With the ascent budget raised to 2, three more words appear for")
print("length 4 with two 1's:")
loose = set(words_with_ascents(4, 2, 2)) - set(words_with_ascents(4, 2, 1))
print(" ", ", ".join(sorted(word_str(w) for w in loose)))

print()
print("=" * 64)
print("Ascent sequences (counts follow the Fishburn numbers)")
print("=" * 64)
for n in range(7):
    print(f"  length {n}: {sum(1 for _ in ascent_sequences(n))}")
print("  the fifteen of length 4:")
print("   ", ", ".join(word_str(w) for w in ascent_sequences(4)))

print()
print("Avoiding both 001 and 210 thins them out to a Rascal count:")
avoiding = [word_str(w) for w in avoiders(4, ("001", "210"))]
print("   ", ", ".join(avoiding))
print("  grouped by ascent count (column k of row 3: 1 3 3 1):")
for k in range(4):
    block = [word_str(w) for w in canonical_avoiders(4, k)]
    print(f"    k={k}: {', '.join(block)}")

print()
print("=" * 64)
print("Restricted subsets: 2-subsets of {1..4} meeting {1,2} at most once")
print("=" * 64)
for s in restricted_subsets(4, 2, 1):
    print("   ", set(s.elements))
print("  count =", sum(1 for _ in restricted_subsets(4, 2, 1)), "= R(4, 2) =", rascal_value(4, 2))
