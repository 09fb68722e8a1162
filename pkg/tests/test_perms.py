import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bestchoice import (
    InputError,
    IndexOutOfRange,
    InvalidSequence,
    PermMultiset,
    RankMismatch,
    ResourceLimit,
    all_permutations,
    avoiders,
    catalan,
    contains_pattern,
    flatten,
    format_multiset,
    format_perm,
    format_word,
    is_2n1_avoiding,
    left_to_right_maxima,
    lrm_count,
    lrm_positions,
    parse_multiset_text,
    parse_perm_text,
    prefix_flattening,
    validate_permutation,
)

distinct_int_seqs = st.lists(
    st.integers(min_value=-1000, max_value=1000), unique=True, min_size=1, max_size=10
)


def brute_avoiders(n, sigma):
    """Independent oracle: filter all of S_n through the subsequence search."""
    return sorted(p for p in all_permutations(n) if not contains_pattern(p, sigma))


class TestFlatten:
    def test_examples(self):
        assert flatten((5, 2, 9)) == (2, 1, 3)
        assert flatten((1, 2, 3)) == (1, 2, 3)
        assert flatten((3, 1, 5)) == (2, 1, 3)

    def test_rejects_duplicates_and_empty(self):
        with pytest.raises(InvalidSequence):
            flatten((1, 1, 2))
        with pytest.raises(InvalidSequence):
            flatten(())

    @given(distinct_int_seqs)
    def test_idempotent(self, seq):
        once = flatten(seq)
        assert flatten(once) == once

    @given(distinct_int_seqs)
    def test_preserves_relative_order(self, seq):
        out = flatten(seq)
        assert sorted(out) == list(range(1, len(seq) + 1))
        for i, j in itertools.combinations(range(len(seq)), 2):
            assert (out[i] < out[j]) == (seq[i] < seq[j])


class TestPrefixFlattening:
    def test_examples(self):
        assert prefix_flattening((3, 1, 4, 2, 5), 3) == (2, 1, 3)
        assert prefix_flattening((3, 1, 4, 2, 5), 5) == (3, 1, 4, 2, 5)
        assert prefix_flattening((3, 1, 4, 2, 5), 1) == (1,)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            prefix_flattening((2, 1, 3), 0)
        with pytest.raises(IndexOutOfRange):
            prefix_flattening((2, 1, 3), 4)

    def test_lrm_prefixes_end_in_their_maximum(self):
        for perm in all_permutations(5):
            for pos in lrm_positions(perm):
                pf = prefix_flattening(perm, pos)
                assert pf[-1] == len(pf)


class TestLeftToRightMaxima:
    def test_examples(self):
        assert left_to_right_maxima((2, 3, 1, 4)) == [(1, 2), (2, 3), (4, 4)]
        assert lrm_positions((1, 4, 2, 3)) == (1, 2)
        assert left_to_right_maxima((4, 3, 2, 1)) == [(1, 4)]

    def test_extremes(self):
        for n in range(1, 7):
            for perm in all_permutations(n):
                k = lrm_count(perm)
                assert (k == 1) == (perm[0] == n)
                assert (k == n) == (perm == tuple(range(1, n + 1)))


class TestContainsPattern:
    def test_examples(self):
        assert contains_pattern((3, 1, 4, 2, 5), (2, 3, 1))
        assert not contains_pattern(tuple(range(1, 8)), (2, 1))
        assert contains_pattern((2, 3, 1, 4), (2, 3, 1))

    def test_short_perm_cannot_contain(self):
        assert not contains_pattern((1,), (1, 2))

    def test_pattern_must_be_valid(self):
        with pytest.raises(InvalidSequence):
            contains_pattern((1, 2), ())
        with pytest.raises(InvalidSequence):
            contains_pattern((1, 2), (1, 3))


class TestAvoiders:
    def test_rank_3_231(self):
        ms = avoiders(3, (2, 3, 1))
        assert ms.support() == ((1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 1, 2), (3, 2, 1))
        assert ms.cardinality == 5

    def test_rank_4_321_cardinality(self):
        assert avoiders(4, (3, 2, 1)).cardinality == 14

    def test_rank_1(self):
        assert avoiders(1, (1, 2)).support() == ((1,),)

    @pytest.mark.parametrize("sigma", list(itertools.permutations((1, 2, 3))) + [(2, 1)])
    def test_matches_brute_filter(self, sigma):
        # The backtracking generator against the independent brute filter.
        for n in range(1, 7):
            assert list(avoiders(n, sigma).support()) == brute_avoiders(n, sigma)

    @pytest.mark.parametrize("sigma", list(itertools.permutations((1, 2, 3))))
    def test_catalan_cardinality(self, sigma):
        for n in range(1, 9):
            assert avoiders(n, sigma).cardinality == catalan(n)

    def test_231_avoiders_are_2n1_avoiding(self):
        # Avoiding 231 enforces the two-N-one condition without naming n.
        for n in range(1, 9):
            assert all(is_2n1_avoiding(p) for p in avoiders(n, (2, 3, 1)).support())

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit):
            avoiders(13, (2, 3, 1))
        with pytest.raises(ResourceLimit):
            all_permutations(13)


class TestIs2N1Avoiding:
    def test_examples(self):
        assert is_2n1_avoiding((3, 1, 5, 4, 2))
        assert not is_2n1_avoiding((1, 4, 2, 5, 3))

    def test_max_last_is_vacuous(self):
        for n in range(1, 6):
            for perm in all_permutations(n):
                if perm[-1] == n:
                    assert is_2n1_avoiding(perm)


class TestPermMultiset:
    def test_cardinality_and_multiplicity(self):
        ms = PermMultiset(3, {(1, 2, 3): 2, (2, 1, 3): 1})
        assert ms.cardinality == 3
        assert ms.multiplicity((1, 2, 3)) == 2
        assert ms.multiplicity((3, 2, 1)) == 0
        assert (2, 1, 3) in ms

    def test_rank_agreement_enforced(self):
        with pytest.raises(RankMismatch):
            PermMultiset(3, {(1, 2): 1})

    def test_positive_multiplicities_enforced(self):
        with pytest.raises(InvalidSequence):
            PermMultiset(2, {(1, 2): 0})

    def test_from_perms_counts_repeats(self):
        ms = PermMultiset.from_perms([(2, 1), (2, 1), (1, 2)])
        assert ms.multiplicity((2, 1)) == 2
        assert ms.cardinality == 3

    def test_empty_with_explicit_rank(self):
        ms = PermMultiset(4)
        assert ms.cardinality == 0
        assert not ms


class TestTextFormats:
    def test_parse_perm_line(self):
        assert parse_perm_text("3 1 4 2") == (3, 1, 4, 2)
        with pytest.raises(InputError):
            parse_perm_text("1 1 2")
        with pytest.raises(InputError):
            parse_perm_text("1 x 2")

    def test_parse_multiset(self):
        text = "# the example bine\n\n3 1 4 2\n1 4 2 3\n2 3 1 4 * 2\n"
        ms = parse_multiset_text(text)
        assert ms.rank == 4
        assert ms.cardinality == 4
        assert ms.multiplicity((2, 3, 1, 4)) == 2

    def test_parse_errors_name_the_line(self):
        with pytest.raises(InputError, match=":2:"):
            parse_multiset_text("1 2 3\n1 1 2\n")
        with pytest.raises(InputError, match="rank"):
            parse_multiset_text("1 2 3\n1 2\n")
        with pytest.raises(InputError, match="multiplicity"):
            parse_multiset_text("1 2 3 * 0\n")
        with pytest.raises(InputError):
            parse_multiset_text("# nothing\n")

    def test_canonical_round_trip(self):
        text = "1 4 2 3\n2 3 1 4 * 2\n3 1 4 2\n"
        assert format_multiset(parse_multiset_text(text)) == text

    def test_format_word(self):
        assert format_word((2, 3, 1, 4)) == "2314"
        assert format_perm((2, 3, 1, 4)) == "2 3 1 4"
        big = tuple(range(1, 11))
        assert format_word(big) == format_perm(big)


@settings(max_examples=30)
@given(st.permutations(list(range(1, 7))))
def test_validate_accepts_all_of_s6(perm):
    assert validate_permutation(perm) == tuple(perm)
