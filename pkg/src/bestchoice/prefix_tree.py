"""The containment tree of eligible prefixes and its maximal antichains.

An *eligible prefix* of size ``i`` is a permutation of ``1..i`` whose last
entry is a left-to-right maximum, i.e. equals ``i``.  Eligible prefix ``q``
contains eligible prefix ``p`` when the first ``|p|`` entries of ``q`` flatten
to ``p``; this containment order on all eligible prefixes of sizes ``1..N`` is
a rooted tree with root ``(1,)``.  The parent of any non-root node is its
longest proper eligible prefix flattening, equivalently the flattening up to
its next-to-last left-to-right maximum.

A strategy for the stopping game is a *strike set*: an antichain of eligible
prefixes.  Complete strategies are the maximal antichains, the subsets that
meet every root-to-leaf path.  Maximal antichains of a rooted tree satisfy a
product recursion: those for the subtree at ``r`` are ``{r}`` itself plus all
unions of one maximal antichain per child subtree.  Their number explodes
quickly (the rank-6 tree already has over 2*10^8), so enumeration takes a
budget and a count-only companion is provided.

Built trees are immutable and freely shareable between threads.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, replace
from math import factorial

from .errors import InputError, InvalidStrikeSet, NotInTree, ResourceLimit
from .perms import (
    MAX_ENUM_RANK,
    Perm,
    flatten,
    format_perm,
    format_word,
    lrm_positions,
    parse_perm_text,
)

ROOT: Perm = (1,)


def is_eligible(prefix: Sequence[int]) -> bool:
    """Whether the last entry is a left-to-right maximum (exceeds all earlier)."""
    last = prefix[-1]
    return all(v < last for v in prefix[:-1])


def prefix_contains(outer: Perm, inner: Perm) -> bool:
    """Containment order on eligible prefixes: ``inner`` is an initial
    flattening of ``outer``."""
    if len(inner) > len(outer):
        return False
    return flatten(outer[: len(inner)]) == inner


def eligible_parent(prefix: Perm) -> Perm | None:
    """The longest proper eligible prefix flattening, or None for the root.

    The eligible prefix flattenings of a node end exactly at its left-to-right
    maxima, so the parent is the flattening up to the next-to-last one.
    """
    if len(prefix) == 1:
        return None
    # For an eligible prefix the last LRM is the final position itself, and
    # position 1 guarantees a next-to-last one exists.
    return flatten(prefix[: lrm_positions(prefix)[-2]])


@dataclass(frozen=True, eq=True)
class PrefixTree:
    """Rooted containment tree of all eligible prefixes of sizes 1..rank.

    ``children`` maps every node to its lexicographically sorted children and
    has one key per node; ``parent`` omits the root.  ``annotation`` is absent
    until a game is projected onto the tree, after which it holds an explicit
    (possibly zero) count for every node.
    """

    rank: int
    parent: dict[Perm, Perm]
    children: dict[Perm, tuple[Perm, ...]]
    annotation: dict[Perm, int] | None = None

    @property
    def root(self) -> Perm:
        return ROOT

    def __contains__(self, node: object) -> bool:
        return node in self.children

    @property
    def node_count(self) -> int:
        return len(self.children)

    def nodes(self) -> tuple[Perm, ...]:
        """All nodes, sorted by size then lexicographically."""
        return tuple(sorted(self.children, key=lambda p: (len(p), p)))

    def maximal_nodes(self) -> tuple[Perm, ...]:
        """The childless nodes: the (rank-1)! permutations of S_rank ending in rank."""
        return tuple(sorted(p for p, cs in self.children.items() if not cs))

    def annotated(self, counts: dict[Perm, int]) -> "PrefixTree":
        return replace(self, annotation=counts)


def build_prefix_tree(n: int) -> PrefixTree:
    """Construct the tree of eligible prefixes up to size ``n``.

    The eligible prefixes of size ``i`` are exactly the permutations of
    ``1..i`` ending in ``i``, obtained by appending ``i`` to each member of
    S_{i-1}.
    """
    if not 1 <= n <= MAX_ENUM_RANK:
        raise ResourceLimit(f"prefix tree rank must be within 1..{MAX_ENUM_RANK}, got {n}")
    parent: dict[Perm, Perm] = {}
    children: dict[Perm, list[Perm]] = {}
    for size in range(1, n + 1):
        for head in itertools.permutations(range(1, size)):
            node = head + (size,)
            children[node] = []
            p = eligible_parent(node)
            if p is not None:
                parent[node] = p
    for node, p in parent.items():
        children[p].append(node)
    frozen = {node: tuple(sorted(cs)) for node, cs in children.items()}
    return PrefixTree(rank=n, parent=parent, children=frozen)


def covers(tree: PrefixTree, node: Perm) -> tuple[Perm, ...]:
    """The nodes covering ``node``: its children.  Empty iff the node is maximal."""
    node = tuple(node)
    if node not in tree.children:
        raise NotInTree(f"{format_word(node)} is not a node of the rank-{tree.rank} tree")
    return tree.children[node]


class StrikeSet:
    """An antichain of eligible prefixes; mixed sizes are allowed.

    Construction validates both invariants: every member must be eligible and
    no member may contain another.  Non-eligible prefixes are rejected
    outright (stopping on one can never select the running best candidate, so
    such strategies are taken to be malformed rather than tolerated).
    """

    __slots__ = ("_prefixes",)

    def __init__(self, prefixes: Iterable[Sequence[int]]):
        members = frozenset(tuple(p) for p in prefixes)
        for p in members:
            if not p or not is_eligible(p):
                raise InvalidStrikeSet(f"prefix {format_word(p) if p else '()'} is not eligible")
        for p in members:
            for ancestor in _proper_eligible_prefixes(p):
                if ancestor in members:
                    raise InvalidStrikeSet(
                        f"{format_word(ancestor)} and {format_word(p)} are comparable"
                    )
        self._prefixes = members

    @property
    def prefixes(self) -> frozenset[Perm]:
        return self._prefixes

    def sorted_prefixes(self) -> tuple[Perm, ...]:
        return tuple(sorted(self._prefixes, key=lambda p: (len(p), p)))

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.sorted_prefixes())

    def __len__(self) -> int:
        return len(self._prefixes)

    def __contains__(self, prefix: object) -> bool:
        return prefix in self._prefixes

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StrikeSet):
            return NotImplemented
        return self._prefixes == other._prefixes

    def __hash__(self) -> int:
        return hash(self._prefixes)

    def __repr__(self) -> str:
        return "StrikeSet({%s})" % ", ".join(format_word(p) for p in self.sorted_prefixes())


def _proper_eligible_prefixes(p: Perm) -> Iterator[Perm]:
    # The proper eligible prefix flattenings end at the LRM positions
    # (excluding the last position when the prefix itself is eligible).
    for pos in lrm_positions(p):
        if pos < len(p):
            yield flatten(p[:pos])


def is_maximal_antichain(tree: PrefixTree, strikes: StrikeSet | Iterable[Sequence[int]]) -> bool:
    """Whether the set lies in the tree, is an antichain, and meets every
    root-to-leaf path."""
    if isinstance(strikes, StrikeSet):
        members = set(strikes.prefixes)
    else:
        members = {tuple(p) for p in strikes}
    if not members:
        return False
    if any(p not in tree.children for p in members):
        return False
    for p in members:
        if any(a in members for a in _proper_eligible_prefixes(p)):
            return False
    # Bottom-up coverage: a node is covered when it is struck or all of its
    # children are covered.  Maximality == the root is covered.
    covered: dict[Perm, bool] = {}
    for node in sorted(tree.children, key=len, reverse=True):
        cs = tree.children[node]
        covered[node] = node in members or (bool(cs) and all(covered[c] for c in cs))
    return covered[ROOT]


def count_maximal_antichains(tree: PrefixTree) -> int:
    """Number of maximal antichains, via the product recursion (exact)."""
    counts: dict[Perm, int] = {}
    for node in sorted(tree.children, key=len, reverse=True):
        cs = tree.children[node]
        if not cs:
            counts[node] = 1
        else:
            prod = 1
            for c in cs:
                prod *= counts[c]
            counts[node] = 1 + prod
    return counts[ROOT]


def enumerate_maximal_antichains(
    tree: PrefixTree, max_antichains: int = 1_000_000
) -> Iterator[StrikeSet]:
    """Yield every maximal antichain exactly once, in a deterministic order.

    For each subtree the singleton ``{r}`` comes first, followed by the unions
    of one antichain per child subtree with later children varying fastest.
    The total count is computed up front and a :class:`ResourceLimit` is
    raised when it exceeds ``max_antichains`` (pass ``None`` to disable).
    """
    if max_antichains is not None:
        total = count_maximal_antichains(tree)
        if total > max_antichains:
            raise ResourceLimit(
                f"{total} maximal antichains exceed the budget of {max_antichains}"
            )

    def emit(node: Perm) -> Iterator[tuple[Perm, ...]]:
        yield (node,)
        cs = tree.children[node]
        if not cs:
            return

        def combine(i: int) -> Iterator[tuple[Perm, ...]]:
            if i == len(cs):
                yield ()
                return
            for head in emit(cs[i]):
                for rest in combine(i + 1):
                    yield head + rest

        yield from combine(0)

    for members in emit(ROOT):
        yield StrikeSet(members)


# ---------------------------------------------------------------------------
# export / text formats


def parse_strike_set_text(text: str, source: str = "<strike-set>") -> StrikeSet:
    """Parse a strike-set file: permutation lines, mixed ranks permitted,
    no multiplicities."""
    prefixes: list[Perm] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "*" in line:
            raise InputError(f"{source}:{lineno}: multiplicities are not allowed in strike sets")
        try:
            prefixes.append(parse_perm_text(line))
        except InputError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
    if not prefixes:
        raise InputError(f"{source}: no prefixes found")
    return StrikeSet(prefixes)


def format_strike_set(strikes: StrikeSet) -> str:
    return "\n".join(format_perm(p) for p in strikes.sorted_prefixes()) + "\n"


def tree_to_dot(tree: PrefixTree) -> str:
    """Graphviz text: node labels are permutation words, with a second
    ``(k)`` label line per node once the tree is annotated."""
    lines = ["digraph prefix_tree {"]
    for node in tree.nodes():
        word = format_word(node)
        if tree.annotation is not None:
            label = f"{word}\\n({tree.annotation.get(node, 0)})"
        else:
            label = word
        lines.append(f'  "{word}" [label="{label}"];')
    for node in tree.nodes():
        for child in tree.children[node]:
            lines.append(f'  "{format_word(node)}" -> "{format_word(child)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_json_dict(tree: PrefixTree) -> dict:
    nodes = []
    for node in tree.nodes():
        entry: dict[str, object] = {
            "prefix": format_word(node),
            "parent": format_word(tree.parent[node]) if node in tree.parent else None,
        }
        if tree.annotation is not None:
            entry["count"] = tree.annotation.get(node, 0)
        nodes.append(entry)
    return {"rank": tree.rank, "nodes": nodes}


def tree_to_json(tree: PrefixTree) -> str:
    return json.dumps(tree_to_json_dict(tree), indent=2) + "\n"


def expected_node_count(n: int) -> int:
    """Closed-form node count: sum of i! for i = 0..n-1."""
    return sum(factorial(i) for i in range(n))
