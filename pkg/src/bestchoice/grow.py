"""Growing strategy-indifferent games from a bine of competitors.

Every strategy-indifferent game is equivalent to one grown from a multiset of
rank-(N-1) permutations, the *bine of competitors*: the relative orderings of
everyone except the best candidate.  Growing appends ``N`` to each bine
member and then repeatedly relocates ``N`` one left-to-right maximum earlier,
emitting each intermediate permutation; the emitted chain projects onto one
root-to-leaf path of the prefix tree, so the union over the bine is
indifferent by construction.

Two realizations of the relocation step are provided:

* :func:`phi` places ``N`` at the next-to-last left-to-right maximum while
  preserving the relative order of all other values (the canonical choice,
  and the unique one suited to pattern-defined bines).
* :func:`phi_alt` swaps the entries at the last two left-to-right maximum
  positions, fixing every other entry in place.

Both yield identical projection counts, hence strategically equivalent games,
verified exhaustively in the tests; as permutation sets they differ.

The win probability of a grown game is ``1 / (E + 1)`` where ``E`` is the
mean number of left-to-right maxima per bine member, and its size is
``|bine| * (E + 1)``, always an integer.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import EmptyGame, NotApplicable, ResourceLimit
from .perms import (
    MAX_ENUM_RANK,
    Perm,
    PermMultiset,
    format_perm,
    lrm_count,
    lrm_positions,
)


class GrowthMap(enum.Enum):
    PHI = "phi"
    PHI_ALT = "phi-alt"


def phi(perm: Perm) -> Perm:
    """Move the largest value to the next-to-last left-to-right maximum
    position, keeping all other values in their relative order.

    Defined for permutations with at least two left-to-right maxima; each
    application reduces the count by exactly one.
    """
    n = len(perm)
    positions = lrm_positions(perm)
    if len(positions) < 2:
        raise NotApplicable(f"{format_perm(perm)} has a single left-to-right maximum")
    m = positions[-2]
    rest = [v for v in perm if v != n]
    return tuple(rest[: m - 1] + [n] + rest[m - 1 :])


def phi_inverse(perm: Perm) -> Perm:
    """Undo :func:`phi` by moving the largest value back to the next
    left-to-right maximum on its right (to the end if there is none).

    Only permutations in the image of :func:`phi` are accepted: the largest
    value must not be last, and the entry immediately to its right must
    exceed everything on its left (the two-N-one condition that every phi
    image satisfies).
    """
    n = len(perm)
    m = perm.index(n) + 1
    if m == n:
        raise NotApplicable(
            f"{format_perm(perm)} ends in its maximum; chain origins have no phi preimage"
        )
    rest = [v for v in perm if v != n]
    positions = lrm_positions(rest)
    if m not in positions:
        raise NotApplicable(f"{format_perm(perm)} is not in the image of phi")
    later = [j for j in positions if j > m]
    g = later[0] if later else n
    return tuple(rest[: g - 1] + [n] + rest[g - 1 :])


def phi_alt(perm: Perm) -> Perm:
    """Swap the entries at the last two left-to-right maximum positions.

    This places the largest value at the next-to-last maximum by moving the
    displaced entry into the largest value's old position, fixing all other
    entries; it projects onto the same prefix as :func:`phi`.
    """
    positions = lrm_positions(perm)
    if len(positions) < 2:
        raise NotApplicable(f"{format_perm(perm)} has a single left-to-right maximum")
    m, last = positions[-2], positions[-1]
    out = list(perm)
    out[m - 1], out[last - 1] = out[last - 1], out[m - 1]
    return tuple(out)


_MAPS = {GrowthMap.PHI: phi, GrowthMap.PHI_ALT: phi_alt}


def growth_chain(perm: Perm, growth: GrowthMap = GrowthMap.PHI) -> tuple[Perm, ...]:
    """The chain ``perm, map(perm), map(map(perm)), ...`` down to a single
    left-to-right maximum.  Its length equals the maxima count of ``perm``."""
    step = _MAPS[GrowthMap(growth)]
    chain = [perm]
    while lrm_count(chain[-1]) >= 2:
        chain.append(step(chain[-1]))
    return tuple(chain)


def grow_game(bine: PermMultiset, growth: GrowthMap = GrowthMap.PHI) -> PermMultiset:
    """Grow the strategy-indifferent game of rank ``bine.rank + 1``.

    Appends the new maximum to each bine member and emits its full chain,
    carrying multiplicities through.  The result has cardinality
    ``bine.cardinality * (expected_lrm(bine) + 1)``.
    """
    if bine.cardinality == 0:
        raise EmptyGame("cannot grow a game from an empty bine")
    rank = bine.rank + 1
    if rank > MAX_ENUM_RANK:
        raise ResourceLimit(f"grown rank {rank} exceeds the limit {MAX_ENUM_RANK}")
    counts: dict[Perm, int] = {}
    for perm, mult in bine.items():
        for member in growth_chain(perm + (rank,), growth):
            counts[member] = counts.get(member, 0) + mult
    return PermMultiset(rank, counts)


def bine_of_competitors(game: PermMultiset) -> PermMultiset:
    """Recover the bine: members ending in the maximum, last entry dropped."""
    if game.rank < 2:
        raise NotApplicable("a rank-1 game has no competitors")
    rank = game.rank
    counts: dict[Perm, int] = {}
    for perm, mult in game.items():
        if perm[-1] == rank:
            counts[perm[:-1]] = counts.get(perm[:-1], 0) + mult
    return PermMultiset(rank - 1, counts)


def expected_lrm(multiset: PermMultiset) -> Fraction:
    """Multiplicity-weighted mean number of left-to-right maxima, exact."""
    if multiset.cardinality == 0:
        raise EmptyGame("expected value over an empty multiset is undefined")
    total = sum(mult * lrm_count(perm) for perm, mult in multiset.items())
    return Fraction(total, multiset.cardinality)


def indifferent_win_probability(bine: PermMultiset) -> Fraction:
    """Win probability of the game grown from ``bine``: 1 / (mean maxima + 1)."""
    return 1 / (expected_lrm(bine) + 1)


def game_size(bine: PermMultiset) -> int:
    """Cardinality of the grown game, computed directly as an integer."""
    if bine.cardinality == 0:
        raise EmptyGame("the game grown from an empty bine is undefined")
    return sum(mult * (lrm_count(perm) + 1) for perm, mult in bine.items())
