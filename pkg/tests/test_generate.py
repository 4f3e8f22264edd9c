"""Streams for the word families: golden listings, counts, ordering."""

from itertools import product

import pytest

from rascal.errors import DomainViolation, ResourceLimit
from rascal.generate import (
    RestrictedSubset,
    all_binary_words,
    ascent_sequences,
    avoiders,
    canonical_avoiders,
    count_words_with_ascents,
    restricted_subsets,
    words_with_ascents,
)
from rascal.numbers import choose, rascal_gen_value, rascal_value
from rascal.words import asc, is_ascent_sequence, is_rgf, word_str

PATTERNS = ("001", "210")

# the nine words with six letters, four ones, and at most one ascent
B46 = [
    "001111",
    "011110",
    "100111",
    "101110",
    "110011",
    "110110",
    "111001",
    "111010",
    "111100",
]

ASCSEQ4 = [
    "0000",
    "0001",
    "0010",
    "0011",
    "0012",
    "0100",
    "0101",
    "0102",
    "0110",
    "0111",
    "0112",
    "0120",
    "0121",
    "0122",
    "0123",
]


def lex_increasing(seq):
    return all(a < b for a, b in zip(seq, seq[1:]))


class TestAllBinaryWords:
    def test_n2(self):
        assert [word_str(w) for w in all_binary_words(2)] == ["00", "01", "10", "11"]

    def test_n0(self):
        assert list(all_binary_words(0)) == [()]

    def test_n4_count(self):
        assert sum(1 for _ in all_binary_words(4)) == 16

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            list(all_binary_words(25))
        with pytest.raises(ResourceLimit):
            list(all_binary_words(8, cap=6))


class TestWordsWithAscents:
    def test_nine_word_family(self):
        got = [word_str(w) for w in words_with_ascents(6, 4, 1)]
        assert got == B46

    def test_zero_ascents_single_word(self):
        for n in range(8):
            for k in range(n + 1):
                only = list(words_with_ascents(n, k, 0))
                assert only == [(1,) * k + (0,) * (n - k)]

    def test_single_one_with_slack(self):
        got = [word_str(w) for w in words_with_ascents(3, 1, 2)]
        assert got == ["001", "010", "100"]

    def test_structured_equals_brute_force(self):
        # check=True raises if the structured stream differs from the filter
        for n in range(11):
            for k in range(n + 1):
                for j in range(4):
                    list(words_with_ascents(n, k, j, check=True))

    def test_counts_match_values(self):
        for n in range(13):
            for k in range(n + 1):
                for j in range(5):
                    words = list(words_with_ascents(n, k, j))
                    assert len(words) == rascal_gen_value(n, k, j)
                    assert count_words_with_ascents(n, k, j) == len(words)

    def test_stream_strictly_increasing(self):
        assert lex_increasing(list(words_with_ascents(9, 4, 3)))

    def test_outside_triangle_empty(self):
        assert list(words_with_ascents(3, 5, 1)) == []
        assert list(words_with_ascents(-1, 0, 1)) == []


class TestAscentSequences:
    def test_length_four_family(self):
        got = [word_str(w) for w in ascent_sequences(4)]
        assert got == ASCSEQ4
        assert len(got) == 15

    def test_length_one(self):
        assert list(ascent_sequences(1)) == [(0,)]

    def test_length_zero(self):
        assert list(ascent_sequences(0)) == [()]

    def test_length_five_count(self):
        assert sum(1 for _ in ascent_sequences(5)) == 53

    def test_against_independent_oracle(self):
        # depth-first regeneration straight from the definition
        def oracle(n):
            if n == 0:
                return [()]
            out = []
            stack = [((0,), 0)]
            while stack:
                prefix, ascents = stack.pop()
                if len(prefix) == n:
                    out.append(prefix)
                    continue
                for x in range(ascents + 2):
                    stack.append((prefix + (x,), ascents + (1 if x > prefix[-1] else 0)))
            return sorted(out)

        for n in range(9):
            assert list(ascent_sequences(n)) == oracle(n)

    def test_all_satisfy_predicate(self):
        for w in ascent_sequences(7):
            assert is_ascent_sequence(w)

    def test_cap(self):
        with pytest.raises(ResourceLimit):
            list(ascent_sequences(13))
        assert sum(1 for _ in ascent_sequences(6, cap=6)) == 217

    def test_stream_strictly_increasing(self):
        assert lex_increasing(list(ascent_sequences(6)))


class TestAvoiders:
    def test_family_of_length_four(self):
        got = [word_str(w) for w in avoiders(4, PATTERNS)]
        assert got == ["0000", "0100", "0110", "0111", "0120", "0121", "0122", "0123"]

    def test_with_ascent_count(self):
        got = [word_str(w) for w in avoiders(4, PATTERNS, 1)]
        assert got == ["0100", "0110", "0111"]

    def test_empty_pattern_set(self):
        assert list(avoiders(5)) == list(ascent_sequences(5))

    def test_generic_containment_agrees(self):
        from rascal.words import contains_pattern

        for n in range(8):
            direct = [
                w
                for w in ascent_sequences(n)
                if not contains_pattern(w, "001") and not contains_pattern(w, "210")
            ]
            assert list(avoiders(n, PATTERNS)) == direct

    def test_every_avoider_is_rgf(self):
        for n in range(9):
            for w in avoiders(n, ("001",)):
                assert is_rgf(w)

    def test_invalid_pattern_rejected(self):
        with pytest.raises(ValueError):
            list(avoiders(4, ("12",)))


class TestCanonicalAvoiders:
    def test_k2(self):
        assert [word_str(w) for w in canonical_avoiders(4, 2)] == ["0120", "0121", "0122"]

    def test_k0(self):
        assert [word_str(w) for w in canonical_avoiders(4, 0)] == ["0000"]

    def test_n5_k2_count(self):
        got = [word_str(w) for w in canonical_avoiders(5, 2)]
        assert got == ["01200", "01211", "01220", "01221", "01222"]
        assert len(got) == 5 == rascal_value(4, 2)

    def test_matches_filtering_oracle(self):
        for n in range(9):
            for k in range(n + 1):
                assert list(canonical_avoiders(n, k)) == list(avoiders(n, PATTERNS, k))

    def test_counts(self):
        for n in range(1, 10):
            for k in range(n):
                assert sum(1 for _ in canonical_avoiders(n + 1, k)) == rascal_value(n, k)

    def test_stream_strictly_increasing(self):
        assert lex_increasing(list(canonical_avoiders(9, 4)))


class TestRestrictedSubsets:
    def test_j1(self):
        got = [s.elements for s in restricted_subsets(4, 2, 1)]
        assert got == [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        assert len(got) == rascal_value(4, 2)

    def test_j0(self):
        assert [s.elements for s in restricted_subsets(4, 2, 0)] == [(3, 4)]

    def test_vacuous_bound(self):
        for n in range(8):
            for k in range(n + 1):
                j = min(k, n - k)
                assert sum(1 for _ in restricted_subsets(n, k, j)) == choose(n, k)

    def test_counts_match_values(self):
        for n in range(11):
            for k in range(n + 1):
                for j in range(4):
                    got = sum(1 for _ in restricted_subsets(n, k, j))
                    assert got == rascal_gen_value(n, k, j)

    def test_stream_strictly_increasing(self):
        elems = [s.elements for s in restricted_subsets(8, 3, 2)]
        assert lex_increasing(elems)

    def test_validation(self):
        with pytest.raises(DomainViolation):
            RestrictedSubset((1, 2), 4, 2, 0)  # meets {1,2} in 2 > 0 elements
        with pytest.raises(DomainViolation):
            RestrictedSubset((0, 1), 4, 2, 2)  # 0 outside the ground set
        with pytest.raises(DomainViolation):
            RestrictedSubset((1, 2), 4, 3, 2)  # wrong cardinality
