"""Generators for the word families counted by Rascal numbers.

Every stream yields in strictly increasing lexicographic order, so
listings are deterministic and diffable.  The slow 2^n oracle and the
fast structured generators are kept separate on purpose: the structured
routes are cross-checked against brute force by the test suite (and at
run time via words_with_ascents(..., check=True)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from collections.abc import Iterator

from .errors import DomainViolation, ResourceLimit
from .limits import DEFAULT_ASCSEQ_CAP, DEFAULT_ENUM_CAP
from .words import Word, as_word, asc, contains_001, contains_210, contains_pattern, is_pattern, word_str


def all_binary_words(n: int, *, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Word]:
    """All 2^n binary words of length n, lexicographic with 0 < 1."""
    if n < 0:
        raise ValueError("word length must be >= 0")
    if n > cap:
        raise ResourceLimit(f"2^{n} words exceeds the enumeration cap n <= {cap}")
    yield from product((0, 1), repeat=n)


def _head_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples (a_0, a_1, ..., a_parts) with a_0 >= 0, a_i >= 1, summing to total."""
    if parts == 0:
        yield (total,)
        return
    for head in range(total - parts + 1):
        for rest in _positive_compositions(total - head, parts):
            yield (head,) + rest


def _positive_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions(total - first, parts - 1):
            yield (first,) + rest


def words_with_ascents(n: int, k: int, j: int = 1, *, check: bool = False) -> Iterator[Word]:
    """The words of length n with k ones and at most j ascents.

    Built structurally: a word with exactly r ascents is
    1^x0 0^y1 1^x1 ... 0^yr 1^xr 0^y0 with the x's summing to k and the
    y's to n-k (outer runs may be empty, inner runs may not), so we walk
    run-length profiles instead of filtering 2^n words.  `check=True`
    additionally compares the result against the brute-force filter.
    """
    if j < 0:
        raise ValueError("ascent bound j must be >= 0")
    if n < 0 or k < 0 or k > n:
        return
    out: list[Word] = []
    for r in range(min(j, k, n - k) + 1):
        for xs in _head_compositions(k, r):
            ones_runs = xs  # (x_0, x_1..x_r)
            for ys in _head_compositions(n - k, r):
                bits: list[int] = [1] * ones_runs[0]
                for i in range(1, r + 1):
                    bits.extend([0] * ys[i])
                    bits.extend([1] * ones_runs[i])
                bits.extend([0] * ys[0])
                out.append(tuple(bits))
    out.sort()
    if check:
        brute = [w for w in all_binary_words(n) if sum(w) == k and asc(w) <= j]
        if out != brute:
            raise AssertionError(
                f"structured generation disagrees with brute force at n={n}, k={k}, j={j}"
            )
    yield from out


def count_words_with_ascents(n: int, k: int, j: int = 1) -> int:
    """|B_k^(j)(n)| by walking every run-length profile.

    Same enumeration as words_with_ascents, one count per word, without
    materializing the letters; this is the cheap oracle used for large
    identity grids.
    """
    if j < 0:
        raise ValueError("ascent bound j must be >= 0")
    if n < 0 or k < 0 or k > n:
        return 0
    total = 0
    for r in range(min(j, k, n - k) + 1):
        y_profiles = list(_head_compositions(n - k, r))
        for _xs in _head_compositions(k, r):
            for _ys in y_profiles:
                total += 1
    return total


def ascent_sequences(n: int, *, cap: int = DEFAULT_ASCSEQ_CAP) -> Iterator[Word]:
    """All ascent sequences of length n (lexicographic; Fishburn counts)."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if n > cap:
        raise ResourceLimit(f"ascent sequences of length {n} exceed the cap n <= {cap}")
    if n == 0:
        yield ()
        return

    def extend(prefix: tuple[int, ...], ascents: int) -> Iterator[Word]:
        if len(prefix) == n:
            yield prefix
            return
        last = prefix[-1]
        for x in range(ascents + 2):
            yield from extend(prefix + (x,), ascents + (1 if x > last else 0))

    yield from extend((0,), 0)


def _avoids_all(w: Word, patterns: tuple[Word, ...]) -> bool:
    for p in patterns:
        if p == (0, 0, 1):
            if contains_001(w):
                return False
        elif p == (2, 1, 0):
            if contains_210(w):
                return False
        elif contains_pattern(w, p):
            return False
    return True


def avoiders(n: int, patterns=(), k: int | None = None, *, cap: int = DEFAULT_ASCSEQ_CAP) -> Iterator[Word]:
    """Ascent sequences of length n avoiding every given pattern,
    optionally restricted to exactly k ascents."""
    pats = tuple(as_word(p) for p in patterns)
    for p in pats:
        if not is_pattern(p):
            raise ValueError(f"{word_str(p)} is not a pattern (not self-reduced)")
    for w in ascent_sequences(n, cap=cap):
        if not _avoids_all(w, pats):
            continue
        if k is not None and asc(w) != k:
            continue
        yield w


def canonical_avoiders(n: int, k: int) -> Iterator[Word]:
    """The {001, 210}-avoiding ascent sequences of length n with exactly
    k ascents, built directly from their closed form.

    Such a sequence is the staircase 0 1 ... k padded with copies of k,
    or the staircase, y copies of k, then a constant block of some
    letter x < k.  Must agree elementwise with the filtering oracle
    avoiders(n, {001, 210}, k).
    """
    if n < 0 or k < 0:
        return
    if n == 0:
        if k == 0:
            yield ()
        return
    if k > n - 1:
        return
    staircase = tuple(range(k))
    tail = n - k  # positions left after the staircase; all hold k or k then x
    for y in range(1, tail):
        for x in range(k):
            yield staircase + (k,) * y + (x,) * (tail - y)
    yield staircase + (k,) * tail


@dataclass(frozen=True)
class RestrictedSubset:
    """A k-subset of {1..n} meeting {1..n-k} in at most j elements."""

    elements: tuple[int, ...]
    n: int
    k: int
    j: int

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if list(elems) != sorted(set(elems)):
            raise DomainViolation(f"subset elements must be sorted and distinct: {elems}")
        if any(e < 1 or e > self.n for e in elems):
            raise DomainViolation(f"subset {elems} not within {{1..{self.n}}}")
        if len(elems) != self.k:
            raise DomainViolation(f"subset {elems} has size {len(elems)}, expected {self.k}")
        if self.j < 0:
            raise DomainViolation("intersection bound j must be >= 0")
        low = sum(1 for e in elems if e <= self.n - self.k)
        if low > self.j:
            raise DomainViolation(
                f"subset {elems} meets {{1..{self.n - self.k}}} in {low} > {self.j} elements"
            )


def restricted_subsets(n: int, k: int, j: int) -> Iterator[RestrictedSubset]:
    """All k-subsets of {1..n} whose intersection with {1..n-k} has at
    most j elements, in lexicographic order of the sorted element lists."""
    if j < 0:
        raise ValueError("intersection bound j must be >= 0")
    if n < 0 or k < 0 or k > n:
        return
    low = n - k
    for combo in combinations(range(1, n + 1), k):
        if sum(1 for e in combo if e <= low) <= j:
            yield RestrictedSubset(combo, n, k, j)
