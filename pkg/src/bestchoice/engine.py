"""Playing strategies against games and scoring them exactly.

A *game* is a :class:`~bestchoice.perms.PermMultiset` of interview rank
orderings of one rank ``n``.  One ordering is drawn uniformly (respecting
multiplicities) and its prefix flattenings are revealed one at a time; a
strategy, given as a strike set, stops at the first prefix flattening that
belongs to the set.  The play wins when the stopped position holds the value
``n``.

Each ordering is winnable at exactly one prefix, its *strike projection*: the
flattening up to and including the value ``n``.  Summing projection counts
over a maximal antichain and dividing by the game size therefore gives the
exact win probability of the corresponding strategy.

All probabilities are :class:`fractions.Fraction` values; floats appear only
in display formatting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGame, InvalidStrikeSet, RankMismatch
from .perms import Perm, PermMultiset, flatten
from .prefix_tree import PrefixTree, StrikeSet, build_prefix_tree, is_maximal_antichain


def strike_projection(perm: Perm) -> Perm:
    """The flattening of ``perm`` up to and including its largest value.

    The result always ends in its own maximum, hence is an eligible prefix:
    it is the unique prefix at which the ordering can be won.
    """
    stop = perm.index(len(perm)) + 1
    return flatten(perm[:stop])


def annotate(tree: PrefixTree, game: PermMultiset) -> PrefixTree:
    """Attach projection counts to every node of the tree.

    ``annotation[p]`` is the number of orderings in the game (with
    multiplicity) whose strike projection is ``p``; nodes hit by no ordering
    carry an explicit zero.  The counts always total the game's cardinality.
    """
    if game.rank != tree.rank:
        raise RankMismatch(f"game rank {game.rank} != tree rank {tree.rank}")
    counts = dict.fromkeys(tree.children, 0)
    for perm, mult in game.items():
        counts[strike_projection(perm)] += mult
    return tree.annotated(counts)


@dataclass(frozen=True)
class GameOutcome:
    """Result of playing one ordering against one strike set.

    ``stop_position`` is absent when no prefix flattening ever hit the strike
    set, which is scored as a loss.  A play may also stop and still lose, when
    the stopped position does not hold the best candidate.
    """

    stop_position: int | None
    selected_value: int | None
    won: bool


def play(perm: Perm, strikes: StrikeSet) -> GameOutcome:
    """Reveal prefix flattenings of ``perm`` until one lies in ``strikes``."""
    if not isinstance(strikes, StrikeSet):
        strikes = StrikeSet(strikes)
    n = len(perm)
    for i in range(1, n + 1):
        if flatten(perm[:i]) in strikes:
            return GameOutcome(stop_position=i, selected_value=perm[i - 1], won=perm[i - 1] == n)
    return GameOutcome(stop_position=None, selected_value=None, won=False)


def win_probability(
    game: PermMultiset,
    strikes: StrikeSet,
    tree: PrefixTree | None = None,
) -> Fraction:
    """Exact win probability of the strategy ``strikes`` in ``game``.

    ``strikes`` must be a maximal antichain of the rank-``game.rank`` prefix
    tree (a complete strategy); pass ``tree`` to reuse a prebuilt tree across
    many evaluations.
    """
    if game.cardinality == 0:
        raise EmptyGame("win probability of the empty game is undefined")
    if not isinstance(strikes, StrikeSet):
        strikes = StrikeSet(strikes)
    if tree is None:
        tree = build_prefix_tree(game.rank)
    elif tree.rank != game.rank:
        raise RankMismatch(f"game rank {game.rank} != tree rank {tree.rank}")
    if not is_maximal_antichain(tree, strikes):
        raise InvalidStrikeSet(
            f"not a maximal antichain of the rank-{game.rank} prefix tree: {strikes!r}"
        )
    wins = sum(
        mult for perm, mult in game.items() if strike_projection(perm) in strikes
    )
    return Fraction(wins, game.cardinality)


def format_probability(value: Fraction) -> str:
    """Reduced fraction first, six-place decimal second: ``3/10 (0.300000)``."""
    return f"{value} ({float(value):.6f})"
