#!/usr/bin/env python3
"""Every constructive map in the library, demonstrated on small inputs
and then checked exhaustively.

Run: python demos/bijection_gallery.py
"""

from rascal import (
    MarkedWord,
    as_word,
    ascseq_to_word,
    divider_decode,
    divider_encode,
    ratio_map,
    strip,
    subset_to_word,
    sym_map,
    unstrip,
    word_str,
    word_to_ascseq,
    word_to_subset,
)
from rascal.maps import (
    verify_altbin,
    verify_ascseq,
    verify_divider,
    verify_genalt,
    verify_ratio,
    verify_subset,
    verify_sym,
)

print("=" * 64)
print("reverse-complement symmetry")
print("=" * 64)
for w in ("110", "1001", "111000"):
    print(f"  {w} -> {word_str(sym_map(w))}  (and back: {word_str(sym_map(sym_map(w)))})")

print()
print("stripping forced prefixes/suffixes")
print(f"  strip(110010, 1, 1)  = {word_str(strip('110010', 1, 1))}")
print(f"  unstrip(10, 2, 1)    = {word_str(unstrip('10', 2, 1))}")

print()
print("binary words <-> {001,210}-avoiding ascent sequences")
for w in ("1100", "1010", "011110"):
    seq = word_to_ascseq(w)
    print(f"  {w} -> {word_str(seq)} -> {word_str(ascseq_to_word(seq))}")

print()
print("binary words <-> restricted subsets")
for w in ("100", "001", "1001", "110110"):
    s = word_to_subset(w, 2)
    print(f"  {w} -> {set(s.elements)} -> {word_str(subset_to_word(s))}")

print()
print("divider encoding of subsets of {1..n}  (n = 6)")
for subset in ((), (1,), (3,), (2, 5), (1, 3, 4)):
    w = divider_encode(subset, 6)
    print(f"  {set(subset) or '{}'} -> {word_str(w)} -> {set(divider_decode(w)) or '{}'}")

print()
print("the marked-word rotation behind k*R(n-1,k-1) - 1 = (k-1)*R(n,k)")
for word, mark in (("110", 2), ("011", 3), ("0111", 4)):
    out = ratio_map(MarkedWord(as_word(word), mark))
    print(f"  {word} mark {mark} -> {out}")
report = verify_ratio(3, 2)
print(f"  sweep at n=3, k=2: image {report['image_size']} of {report['target_size']},"
      f" missed {report['missed'][0]}")

print()
print("=" * 64)
print("exhaustive checks (small sizes)")
print("=" * 64)
checks = [
    ("sym", verify_sym(9)),
    ("ascseq", verify_ascseq(8)),
    ("subset", verify_subset(8, 3)),
    ("divider", verify_divider(8, 3)),
    ("altbin r=3 (signed sum)", verify_altbin(3, 4, 2)),
    ("genalt n=6 j=1 (signed sum)", verify_genalt(6, 1)),
]
for name, rep in checks:
    extra = ""
    if "signed_sum" in rep:
        extra = f", signed sum {rep['signed_sum']}"
    print(f"  {name:<28} {'ok' if rep['ok'] else 'FAILED'} ({rep['checked']} checks{extra})")
