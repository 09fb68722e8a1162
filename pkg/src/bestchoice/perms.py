"""Permutations in one-line notation and multisets of them.

A permutation of rank ``n`` is represented as a plain tuple of the values
``1..n`` in one-line notation, e.g. ``(3, 1, 4, 2)``.  Positions as well as
values are 1-based throughout, which keeps statements like "position of the
left-to-right maximum" aligned with the usual combinatorial conventions.

Everything in this module is a pure function over immutable values, so all
operations are safe to call concurrently.  Functions assume their permutation
arguments are valid; use :func:`validate_permutation` (or the text parsers,
which validate) at trust boundaries.

Text formats
------------
* single permutation: space-separated values on one line, ``3 1 4 2``;
* multiset file: one permutation per line, an optional ``* k`` suffix for a
  multiplicity ``k >= 1``, blank lines and ``#`` comments ignored, and every
  line must have the same rank.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping, Sequence

from .errors import IndexOutOfRange, InputError, InvalidSequence, RankMismatch, ResourceLimit

Perm = tuple[int, ...]

#: Exhaustive enumerations of S_n refuse ranks above this; 12! is already
#: about 4.8e8 elements, the practical desk-scale boundary.
MAX_ENUM_RANK = 12


def validate_permutation(entries: Iterable[int]) -> Perm:
    """Return ``entries`` as a tuple after checking it is a permutation of 1..n.

    >>> validate_permutation([3, 1, 2])
    (3, 1, 2)
    """
    perm = tuple(entries)
    if not perm:
        raise InvalidSequence("a permutation must have rank >= 1")
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidSequence(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def flatten(seq: Sequence[int]) -> Perm:
    """Flatten a sequence of distinct integers to the permutation with the
    same relative order.

    >>> flatten((5, 2, 9))
    (2, 1, 3)
    >>> flatten((1, 2, 3))
    (1, 2, 3)
    """
    if not seq:
        raise InvalidSequence("cannot flatten an empty sequence")
    if len(set(seq)) != len(seq):
        raise InvalidSequence(f"entries are not pairwise distinct: {tuple(seq)}")
    rank_of = {v: i for i, v in enumerate(sorted(seq), 1)}
    return tuple(rank_of[v] for v in seq)


def prefix_flattening(perm: Sequence[int], i: int) -> Perm:
    """The flattening of the first ``i`` entries of ``perm`` (1 <= i <= rank)."""
    if not 1 <= i <= len(perm):
        raise IndexOutOfRange(f"prefix length {i} outside 1..{len(perm)}")
    return flatten(perm[:i])


def left_to_right_maxima(perm: Sequence[int]) -> list[tuple[int, int]]:
    """The (position, value) pairs of the left-to-right maxima, in order.

    An entry is a left-to-right maximum when it exceeds every earlier entry;
    position 1 and the position of the largest value always qualify.

    >>> left_to_right_maxima((2, 3, 1, 4))
    [(1, 2), (2, 3), (4, 4)]
    """
    out: list[tuple[int, int]] = []
    best = 0
    for pos, value in enumerate(perm, 1):
        if value > best:
            out.append((pos, value))
            best = value
    return out


def lrm_positions(perm: Sequence[int]) -> tuple[int, ...]:
    """Positions of the left-to-right maxima, ascending."""
    return tuple(pos for pos, _ in left_to_right_maxima(perm))


def lrm_count(perm: Sequence[int]) -> int:
    """Number of left-to-right maxima."""
    return len(left_to_right_maxima(perm))


def _matches_pattern(values: Sequence[int], pattern: Perm) -> bool:
    # Same relative order as the pattern, compared pairwise to avoid sorting.
    return all(
        (values[a] < values[b]) == (pattern[a] < pattern[b])
        for a in range(len(pattern))
        for b in range(a + 1, len(pattern))
    )


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """Whether some subsequence of ``perm`` flattens to ``pattern``.

    Straightforward subsequence search; ranks here are small enough that
    nothing cleverer is warranted.

    >>> contains_pattern((3, 1, 4, 2, 5), (2, 3, 1))
    True
    >>> contains_pattern((1, 2, 3, 4), (2, 1))
    False
    """
    sigma = validate_permutation(pattern)
    k = len(sigma)
    if k > len(perm):
        return False
    return any(
        _matches_pattern([perm[i] for i in idx], sigma)
        for idx in itertools.combinations(range(len(perm)), k)
    )


def is_2n1_avoiding(perm: Sequence[int]) -> bool:
    """Whether the entry immediately right of the largest value exceeds every
    entry left of the largest value (vacuously true when it is last).

    >>> is_2n1_avoiding((3, 1, 5, 4, 2))
    True
    >>> is_2n1_avoiding((1, 4, 2, 5, 3))
    False
    """
    values = tuple(perm)
    pos = values.index(max(values))
    if pos == len(values) - 1:
        return True
    left = values[:pos]
    return not left or values[pos + 1] > max(left)


def all_permutations(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order.  Refuses n > MAX_ENUM_RANK."""
    if n < 1:
        raise InvalidSequence("rank must be >= 1")
    if n > MAX_ENUM_RANK:
        raise ResourceLimit(f"refusing to enumerate S_{n} (limit {MAX_ENUM_RANK})")
    return iter(itertools.permutations(range(1, n + 1)))


def _ends_occurrence(word: list[int], pattern: Perm) -> bool:
    # Does some subsequence ending at the last entry of word match pattern?
    k = len(pattern)
    if len(word) < k:
        return False
    last = word[-1]
    for idx in itertools.combinations(range(len(word) - 1), k - 1):
        if _matches_pattern([word[i] for i in idx] + [last], pattern):
            return True
    return False


def avoiders(n: int, pattern: Sequence[int]) -> "PermMultiset":
    """The multiplicity-one multiset of permutations in S_n avoiding ``pattern``.

    Generated by backtracking over partial words, pruning as soon as a prefix
    acquires an occurrence of the pattern.  This visits roughly one tree node
    per avoiding prefix instead of filtering all of S_n, which matters for the
    Catalan-sized classes at ranks 9 and 10.  Agreement with the brute-force
    filter through :func:`contains_pattern` is pinned down in the test suite.
    """
    if n < 1:
        raise InvalidSequence("rank must be >= 1")
    if n > MAX_ENUM_RANK:
        raise ResourceLimit(f"refusing to enumerate avoiders in S_{n} (limit {MAX_ENUM_RANK})")
    sigma = validate_permutation(pattern)
    found: list[Perm] = []
    word: list[int] = []

    def extend(remaining: list[int]) -> None:
        if not remaining:
            found.append(tuple(word))
            return
        for j, v in enumerate(remaining):
            word.append(v)
            if not _ends_occurrence(word, sigma):
                extend(remaining[:j] + remaining[j + 1 :])
            word.pop()

    extend(list(range(1, n + 1)))
    return PermMultiset(n, {p: 1 for p in found})


class PermMultiset:
    """A multiset of equal-rank permutations with positive multiplicities.

    Instances are immutable once constructed and compare by rank and content.
    The cardinality is the sum of multiplicities; an empty multiset of a given
    rank is allowed.
    """

    __slots__ = ("_rank", "_counts")

    def __init__(self, rank: int, counts: Mapping[Perm, int] | None = None):
        if rank < 1:
            raise InvalidSequence("rank must be >= 1")
        store: dict[Perm, int] = {}
        for perm, mult in (counts or {}).items():
            p = validate_permutation(perm)
            if len(p) != rank:
                raise RankMismatch(f"expected rank {rank}, got rank {len(p)}")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidSequence(f"multiplicity must be a positive integer, got {mult!r}")
            store[p] = store.get(p, 0) + mult
        self._rank = rank
        self._counts = store

    @classmethod
    def from_perms(cls, perms: Iterable[Iterable[int]], rank: int | None = None) -> "PermMultiset":
        """Build from an iterable of permutations, counting repeats."""
        counts: dict[Perm, int] = {}
        for entries in perms:
            p = validate_permutation(entries)
            counts[p] = counts.get(p, 0) + 1
        if rank is None:
            if not counts:
                raise InvalidSequence("cannot infer the rank of an empty multiset")
            rank = len(next(iter(counts)))
        return cls(rank, counts)

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def cardinality(self) -> int:
        """Sum of multiplicities."""
        return sum(self._counts.values())

    def multiplicity(self, perm: Perm) -> int:
        return self._counts.get(tuple(perm), 0)

    def support(self) -> tuple[Perm, ...]:
        """Distinct members, lexicographically sorted."""
        return tuple(sorted(self._counts))

    def items(self) -> tuple[tuple[Perm, int], ...]:
        """(permutation, multiplicity) pairs, lexicographically sorted."""
        return tuple(sorted(self._counts.items()))

    def counts(self) -> dict[Perm, int]:
        """A fresh dict copy of the multiplicity map."""
        return dict(self._counts)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self._counts.values())

    def __contains__(self, perm: object) -> bool:
        return perm in self._counts

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermMultiset):
            return NotImplemented
        return self._rank == other._rank and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self._rank, frozenset(self._counts.items())))

    def __repr__(self) -> str:
        return f"PermMultiset(rank={self._rank}, cardinality={self.cardinality})"


# ---------------------------------------------------------------------------
# text formats


def format_perm(perm: Sequence[int]) -> str:
    """One-line text form: space-separated values."""
    return " ".join(str(v) for v in perm)


def format_word(perm: Sequence[int]) -> str:
    """Compact word form used for tree labels: ``2314``.

    Falls back to the space-separated form when a value would need more than
    one digit.
    """
    if len(perm) <= 9:
        return "".join(str(v) for v in perm)
    return format_perm(perm)


def parse_perm_text(text: str) -> Perm:
    """Parse a single space-separated permutation line."""
    tokens = text.split()
    if not tokens:
        raise InputError("empty permutation line")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"not an integer: {exc}") from None
    try:
        return validate_permutation(values)
    except InvalidSequence as exc:
        raise InputError(str(exc)) from None


def _iter_data_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_multiset_text(text: str, source: str = "<multiset>") -> PermMultiset:
    """Parse the multiset file format (see module docstring).

    Raises :class:`InputError` naming the offending line.  Repeated lines for
    the same permutation accumulate their multiplicities.
    """
    counts: dict[Perm, int] = {}
    rank: int | None = None
    for lineno, line in _iter_data_lines(text):
        mult = 1
        body = line
        if "*" in line:
            parts = line.split("*")
            if len(parts) != 2:
                raise InputError(f"{source}:{lineno}: more than one '*' multiplicity marker")
            body, mult_text = parts[0], parts[1].strip()
            try:
                mult = int(mult_text)
            except ValueError:
                raise InputError(f"{source}:{lineno}: bad multiplicity {mult_text!r}") from None
            if mult < 1:
                raise InputError(f"{source}:{lineno}: multiplicity must be >= 1, got {mult}")
        try:
            perm = parse_perm_text(body)
        except InputError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
        if rank is None:
            rank = len(perm)
        elif len(perm) != rank:
            raise InputError(
                f"{source}:{lineno}: rank {len(perm)} differs from rank {rank} of the first line"
            )
        counts[perm] = counts.get(perm, 0) + mult
    if rank is None:
        raise InputError(f"{source}: no permutations found")
    return PermMultiset(rank, counts)


def format_multiset(multiset: PermMultiset) -> str:
    """Canonical text form: lexicographically sorted, ``* k`` only for k >= 2."""
    lines = []
    for perm, mult in multiset.items():
        suffix = f" * {mult}" if mult > 1 else ""
        lines.append(format_perm(perm) + suffix)
    return "\n".join(lines) + ("\n" if lines else "")
