import itertools
from fractions import Fraction

import pytest

from bestchoice import (
    EmptyGame,
    GameOutcome,
    InvalidStrikeSet,
    PermMultiset,
    RankMismatch,
    StrikeSet,
    all_permutations,
    annotate,
    avoiders,
    build_prefix_tree,
    catalan,
    enumerate_maximal_antichains,
    format_probability,
    play,
    strike_projection,
    win_probability,
)

# The worked example's projection counts onto the rank-5 tree.
EXAMPLE_COUNTS = {
    (1,): 3,
    (1, 2): 2,
    (2, 1, 3): 1,
    (2, 3, 1, 4): 1,
    (2, 3, 1, 4, 5): 1,
    (1, 4, 2, 3, 5): 1,
    (3, 1, 4, 2, 5): 1,
}


class TestStrikeProjection:
    def test_examples(self):
        assert strike_projection((5, 3, 1, 4, 2)) == (1,)
        assert strike_projection((3, 1, 5, 4, 2)) == (2, 1, 3)
        assert strike_projection((2, 3, 1, 5, 4)) == (2, 3, 1, 4)

    def test_result_is_eligible(self):
        from bestchoice import is_eligible

        for perm in all_permutations(5):
            proj = strike_projection(perm)
            assert is_eligible(proj)
            assert proj[-1] == len(proj)


class TestAnnotate:
    def test_example_counts(self, example_game):
        tree = annotate(build_prefix_tree(5), example_game)
        for node in tree.children:
            assert tree.annotation[node] == EXAMPLE_COUNTS.get(node, 0)
        assert sum(tree.annotation.values()) == 10

    def test_s3_uniform(self, s3_uniform):
        tree = annotate(build_prefix_tree(3), s3_uniform)
        assert tree.annotation == {(1,): 2, (1, 2): 2, (1, 2, 3): 1, (2, 1, 3): 1}

    def test_empty_game_all_zero(self):
        tree = annotate(build_prefix_tree(3), PermMultiset(3))
        assert set(tree.annotation.values()) == {0}

    def test_rank_mismatch(self, s3_uniform):
        with pytest.raises(RankMismatch):
            annotate(build_prefix_tree(4), s3_uniform)

    def test_totals_match_cardinality(self, s4_uniform):
        tree = annotate(build_prefix_tree(4), s4_uniform)
        assert sum(tree.annotation.values()) == s4_uniform.cardinality
        assert all(v >= 0 for v in tree.annotation.values())


class TestPlay:
    def test_examples(self):
        root = StrikeSet([(1,)])
        assert play((5, 3, 1, 4, 2), root) == GameOutcome(1, 5, True)
        assert play((3, 1, 5, 4, 2), root) == GameOutcome(1, 3, False)
        deep = StrikeSet([(2, 1, 3)])
        assert play((3, 1, 5, 4, 2), deep) == GameOutcome(3, 5, True)

    def test_never_stopping_is_a_loss(self):
        outcome = play((2, 1, 3), StrikeSet([(1, 2)]))
        assert outcome == GameOutcome(None, None, False)

    def test_malformed_strategy_rejected(self):
        with pytest.raises(InvalidStrikeSet):
            play((1, 2, 3), [(2, 1)])

    def test_projection_consistency_small(self):
        # Winning is equivalent to the strike projection lying in the set,
        # for every ordering and every complete strategy.
        for n in (3, 4):
            tree = build_prefix_tree(n)
            for strikes in enumerate_maximal_antichains(tree):
                for perm in all_permutations(n):
                    assert play(perm, strikes).won == (strike_projection(perm) in strikes)


class TestWinProbability:
    def test_example_maximal_nodes(self, example_game):
        tree = build_prefix_tree(5)
        strikes = StrikeSet(tree.maximal_nodes())
        assert win_probability(example_game, strikes) == Fraction(3, 10)

    def test_example_root(self, example_game):
        assert win_probability(example_game, StrikeSet([(1,)])) == Fraction(3, 10)

    def test_231_avoiders_rank_4(self):
        game = avoiders(4, (2, 3, 1))
        tree = build_prefix_tree(4)
        for strikes in enumerate_maximal_antichains(tree):
            assert win_probability(game, strikes, tree=tree) == Fraction(5, 14)
        assert Fraction(5, 14) == Fraction(catalan(3), catalan(4))

    def test_empty_game(self):
        with pytest.raises(EmptyGame):
            win_probability(PermMultiset(3), StrikeSet([(1,)]))

    def test_non_maximal_antichain_rejected(self, s3_uniform):
        with pytest.raises(InvalidStrikeSet):
            win_probability(s3_uniform, StrikeSet([(1, 2)]))

    def test_non_antichain_rejected(self, s3_uniform):
        with pytest.raises(InvalidStrikeSet):
            win_probability(s3_uniform, [(1,), (1, 2)])

    def test_maximal_node_strategy_counts_final_position_wins(self):
        # Striking only the maximal nodes wins exactly the orderings whose
        # last entry is the best candidate.
        for n in (3, 4):
            game = PermMultiset.from_perms(all_permutations(n))
            strikes = StrikeSet(build_prefix_tree(n).maximal_nodes())
            direct = sum(1 for p in game.support() if p[-1] == n)
            assert win_probability(game, strikes) == Fraction(direct, game.cardinality)

    def test_formula_matches_play_counting(self, s4_uniform):
        # The projection-count formula against literal play-by-play scoring.
        tree = build_prefix_tree(4)
        for strikes in enumerate_maximal_antichains(tree):
            played = sum(
                mult * play(perm, strikes).won for perm, mult in s4_uniform.items()
            )
            assert win_probability(s4_uniform, strikes, tree=tree) == Fraction(
                played, s4_uniform.cardinality
            )


def test_format_probability():
    assert format_probability(Fraction(3, 10)) == "3/10 (0.300000)"
    assert format_probability(Fraction(1, 3)) == "1/3 (0.333333)"
    assert format_probability(Fraction(0)) == "0 (0.000000)"
