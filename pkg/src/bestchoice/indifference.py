"""Deciding strategy indifference by three equivalent criteria.

A game is *strategy-indifferent* when every complete strategy (every maximal
antichain of the prefix tree) wins with the same probability.  Three
characterizations are implemented, and the package's test suite certifies
their agreement:

* ``cover_sum``: the projection count of every non-maximal node equals the
  sum over its covers.  Linear in the tree size after annotation; the default.
* ``chain_partition``: the game splits into subsets whose projections are
  full root-to-leaf paths.  Decided constructively by a greedy peel that
  repeatedly removes the path under a containment-maximal annotated node.
* ``brute_force``: evaluate every maximal antichain and compare.  Exponential;
  kept as the ground-truth oracle for small ranks.

Verdicts carry the common win probability when indifferent, and otherwise a
witness: either the first node violating the cover sums, or the first pair of
antichains with different win probabilities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyGame, ResourceLimit
from .perms import MAX_ENUM_RANK, Perm, PermMultiset, format_word
from .prefix_tree import (
    ROOT,
    PrefixTree,
    StrikeSet,
    build_prefix_tree,
    enumerate_maximal_antichains,
)
from .engine import annotate, strike_projection


class Method(enum.Enum):
    COVER_SUM = "cover_sum"
    CHAIN_PARTITION = "chain_partition"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class CoverMismatch:
    """A non-maximal node whose count differs from the sum over its covers."""

    prefix: Perm
    count: int
    cover_sum: int

    def to_json_dict(self) -> dict:
        return {
            "kind": "cover_mismatch",
            "prefix": format_word(self.prefix),
            "count": self.count,
            "cover_sum": self.cover_sum,
        }


@dataclass(frozen=True)
class AntichainPair:
    """Two complete strategies observed to win with different probabilities."""

    first: StrikeSet
    first_probability: Fraction
    second: StrikeSet
    second_probability: Fraction

    def to_json_dict(self) -> dict:
        return {
            "kind": "antichain_pair",
            "first": [format_word(p) for p in self.first],
            "first_probability": str(self.first_probability),
            "second": [format_word(p) for p in self.second],
            "second_probability": str(self.second_probability),
        }


Witness = CoverMismatch | AntichainPair


@dataclass(frozen=True)
class IndifferenceVerdict:
    """Outcome of an indifference check.

    ``win_probability`` is present exactly when the game is indifferent;
    ``witness`` is present exactly when it is not.
    """

    indifferent: bool
    method: Method
    win_probability: Fraction | None = None
    witness: Witness | None = None

    def to_json_dict(self) -> dict:
        return {
            "indifferent": self.indifferent,
            "method": self.method.value,
            "win_probability": None
            if self.win_probability is None
            else str(self.win_probability),
            "witness": None if self.witness is None else self.witness.to_json_dict(),
        }


@dataclass(frozen=True)
class ChainPartition:
    """A partition of a game into chains.

    Each chain lists members of the game whose strike projections form one
    root-to-leaf path of the prefix tree, ordered leaf projection first.
    Multiplicities across chains add back up to the game exactly.
    """

    rank: int
    chains: tuple[tuple[Perm, ...], ...]

    def to_multiset(self) -> PermMultiset:
        counts: dict[Perm, int] = {}
        for chain in self.chains:
            for perm in chain:
                counts[perm] = counts.get(perm, 0) + 1
        return PermMultiset(self.rank, counts)


def _require_checkable(game: PermMultiset) -> None:
    if game.cardinality == 0:
        raise EmptyGame("cannot decide indifference of the empty game")
    if game.rank > MAX_ENUM_RANK:
        raise ResourceLimit(f"rank {game.rank} exceeds the limit {MAX_ENUM_RANK}")


def _find_cover_mismatch(tree: PrefixTree) -> CoverMismatch | None:
    annotation = tree.annotation or {}
    for node in sorted(tree.children):
        children = tree.children[node]
        if not children:
            continue
        have = annotation.get(node, 0)
        want = sum(annotation.get(c, 0) for c in children)
        if have != want:
            return CoverMismatch(prefix=node, count=have, cover_sum=want)
    return None


def check_cover_sum(game: PermMultiset) -> IndifferenceVerdict:
    """Decide indifference by the cover-sum criterion.

    The witness on failure is the lexicographically first offending node.
    """
    _require_checkable(game)
    tree = annotate(build_prefix_tree(game.rank), game)
    mismatch = _find_cover_mismatch(tree)
    if mismatch is not None:
        return IndifferenceVerdict(False, Method.COVER_SUM, witness=mismatch)
    probability = Fraction(tree.annotation[ROOT], game.cardinality)
    return IndifferenceVerdict(True, Method.COVER_SUM, win_probability=probability)


def maximal_chain_partition(game: PermMultiset) -> ChainPartition | None:
    """Partition the game into maximal saturated chains, or None if impossible.

    Greedy peel: repeatedly pick the lexicographically first annotated node
    with no annotated node strictly above it (containment-maximal).  If the
    game is partitionable, that node is a leaf and its whole root path carries
    positive counts; remove one copy of the path and recurse.  Any failure
    certifies that no partition exists.  Within a path, members are assigned
    lexicographically smallest first.
    """
    _require_checkable(game)
    tree = annotate(build_prefix_tree(game.rank), game)
    counts = dict(tree.annotation or {})
    # Members available per projection, smallest last so list.pop() is lex-first.
    pools: dict[Perm, list[Perm]] = {}
    for perm, mult in game.items():
        pools.setdefault(strike_projection(perm), []).extend([perm] * mult)
    for pool in pools.values():
        pool.sort(reverse=True)

    def root_path(leaf: Perm) -> list[Perm]:
        path = [leaf]
        while path[-1] != ROOT:
            path.append(tree.parent[path[-1]])
        return path

    chains: list[tuple[Perm, ...]] = []
    positive = {p for p, c in counts.items() if c > 0}
    while positive:
        shadowed: set[Perm] = set()
        for q in positive:
            node = q
            while node != ROOT:
                node = tree.parent[node]
                if node in positive:
                    shadowed.add(node)
        top = min(positive - shadowed)
        if tree.children[top]:
            return None  # a containment-maximal annotated node must be a leaf
        path = root_path(top)
        if any(counts[p] == 0 for p in path):
            return None  # the path under the leaf has a gap
        chain = []
        for p in path:
            counts[p] -= 1
            if counts[p] == 0:
                positive.discard(p)
            chain.append(pools[p].pop())
        chains.append(tuple(chain))
    return ChainPartition(rank=game.rank, chains=tuple(chains))


def check_by_chain_partition(game: PermMultiset) -> IndifferenceVerdict:
    """Decide indifference by attempting a maximal chain partition.

    When no partition exists the reported witness is the cover-sum mismatch,
    which the equivalence theorem guarantees to exist in that case.
    """
    partition = maximal_chain_partition(game)
    if partition is None:
        tree = annotate(build_prefix_tree(game.rank), game)
        mismatch = _find_cover_mismatch(tree)
        return IndifferenceVerdict(False, Method.CHAIN_PARTITION, witness=mismatch)
    probability = Fraction(len(partition.chains), game.cardinality)
    return IndifferenceVerdict(True, Method.CHAIN_PARTITION, win_probability=probability)


def check_by_antichain_enumeration(
    game: PermMultiset, max_antichains: int = 100_000
) -> IndifferenceVerdict:
    """Decide indifference by evaluating every complete strategy.

    Only feasible at small ranks (rank 5 means 157 antichains, rank 6 already
    over 2*10^8); the enumeration budget raises :class:`ResourceLimit` first.
    """
    _require_checkable(game)
    tree = annotate(build_prefix_tree(game.rank), game)
    annotation = tree.annotation or {}
    total = game.cardinality
    first: StrikeSet | None = None
    first_probability: Fraction | None = None
    for strikes in enumerate_maximal_antichains(tree, max_antichains=max_antichains):
        probability = Fraction(sum(annotation[p] for p in strikes), total)
        if first is None:
            first, first_probability = strikes, probability
        elif probability != first_probability:
            witness = AntichainPair(first, first_probability, strikes, probability)
            return IndifferenceVerdict(False, Method.BRUTE_FORCE, witness=witness)
    return IndifferenceVerdict(True, Method.BRUTE_FORCE, win_probability=first_probability)


def is_strategy_indifferent(
    game: PermMultiset, method: Method | str = Method.COVER_SUM
) -> IndifferenceVerdict:
    """Dispatch to one of the three equivalent checks (default: cover sums)."""
    method = Method(method)
    if method is Method.COVER_SUM:
        return check_cover_sum(game)
    if method is Method.CHAIN_PARTITION:
        return check_by_chain_partition(game)
    return check_by_antichain_enumeration(game)
