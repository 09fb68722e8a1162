"""Shared fixtures and the seeded random batteries.

The battery generators are deterministic given their seed.  Multiset samples
mix raw random draws with grown games so both verdicts of the indifference
checks are exercised; bine samples are arbitrary sub-multisets.
"""

from __future__ import annotations

import random

import pytest

from bestchoice import GrowthMap, PermMultiset, all_permutations, grow_game

# The worked example: a bine of three rank-4 orderings and the ten-element
# game grown from it.
EXAMPLE_BINE = ((3, 1, 4, 2), (1, 4, 2, 3), (2, 3, 1, 4))
EXAMPLE_GAME = (
    (3, 1, 4, 2, 5),
    (3, 1, 5, 4, 2),
    (5, 3, 1, 4, 2),
    (1, 4, 2, 3, 5),
    (1, 5, 4, 2, 3),
    (5, 1, 4, 2, 3),
    (2, 3, 1, 4, 5),
    (2, 3, 1, 5, 4),
    (2, 5, 3, 1, 4),
    (5, 2, 3, 1, 4),
)


@pytest.fixture
def example_bine() -> PermMultiset:
    return PermMultiset.from_perms(EXAMPLE_BINE)


@pytest.fixture
def example_game() -> PermMultiset:
    return PermMultiset.from_perms(EXAMPLE_GAME)


@pytest.fixture
def s3_uniform() -> PermMultiset:
    return PermMultiset.from_perms(all_permutations(3))


@pytest.fixture
def s4_uniform() -> PermMultiset:
    return PermMultiset.from_perms(all_permutations(4))


def random_sub_multiset(rng: random.Random, rank: int, max_mult: int = 3) -> PermMultiset:
    """A nonempty random sub-multiset of S_rank with multiplicities <= max_mult."""
    population = list(all_permutations(rank))
    support_size = rng.randint(1, min(12, len(population)))
    support = rng.sample(population, support_size)
    return PermMultiset(rank, {p: rng.randint(1, max_mult) for p in support})


def random_game_battery(seed: int, count: int, rank: int) -> list[PermMultiset]:
    """``count`` random games of the given rank, multiplicities <= 3.

    Alternates raw random multisets (almost never indifferent) with games
    grown from random bines one rank below (indifferent by construction), so
    agreement checks across the three criteria see both verdicts.
    """
    rng = random.Random(seed)
    games = []
    for trial in range(count):
        if trial % 2 == 0:
            games.append(random_sub_multiset(rng, rank))
        else:
            bine = random_sub_multiset(rng, rank - 1)
            games.append(grow_game(bine, GrowthMap.PHI))
    return games


def random_bine_battery(seed: int, count: int, rank: int) -> list[PermMultiset]:
    """``count`` random bines of the given rank, multiplicities <= 3."""
    rng = random.Random(seed)
    return [random_sub_multiset(rng, rank) for _ in range(count)]
