"""Left-to-right maxima statistics for the symmetric group and the six
classes avoiding one pattern of size 3.

The classes fall into three families with matching maxima distributions:

* the full symmetric group, distributed by unsigned Stirling numbers of the
  first kind, mean the n-th harmonic number;
* the 123-avoiders, supported on one or two maxima with counts
  ``(C_{n-1}, C_n - C_{n-1})``, mean ``2 - C_{n-1}/C_n``;
* the 231-, 132- and 213-avoiders, distributed by the ballot triangle
  (A033184), mean ``C_{n+1}/C_n - 1``;
* the 321- and 312-avoiders, distributed by the Narayana triangle (A001263),
  mean ``(n+1)/2``.

Used as bines of competitors, these give games whose win probability is
``1/(mean+1)``, tending to 0, 4/11, 1/4 and 0 respectively.  Distributions
are produced by exhaustive enumeration; the closed forms above are separate
code paths so each can check the other.  All arithmetic is exact.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import NotInDomain, NotSupported, ResourceLimit
from .perms import (
    Perm,
    all_permutations,
    avoiders,
    contains_pattern,
    format_word,
    is_2n1_avoiding,
    lrm_count,
)


class PatternClass(enum.Enum):
    SYM = "sym"
    AV123 = "av123"
    AV132 = "av132"
    AV213 = "av213"
    AV231 = "av231"
    AV312 = "av312"
    AV321 = "av321"

    @property
    def pattern(self) -> Perm | None:
        if self is PatternClass.SYM:
            return None
        return tuple(int(c) for c in self.value[2:])


#: Limiting win probability of the game grown from each class, as printed in
#: the summary table.  The harmonic and linear-mean families drift to zero.
ASYMPTOTIC_WIN = {
    PatternClass.SYM: Fraction(0),
    PatternClass.AV123: Fraction(4, 11),
    PatternClass.AV132: Fraction(1, 4),
    PatternClass.AV213: Fraction(1, 4),
    PatternClass.AV231: Fraction(1, 4),
    PatternClass.AV312: Fraction(0),
    PatternClass.AV321: Fraction(0),
}

_MAX_SYM_RANK = 8
_MAX_CATALAN_RANK = 10

_catalan_memo = [1]


def catalan(n: int) -> int:
    """The n-th Catalan number, by the convolution recurrence
    ``C_{n+1} = sum C_i * C_{n-i}``."""
    if n < 0:
        raise ValueError("Catalan numbers need n >= 0")
    while len(_catalan_memo) <= n:
        m = len(_catalan_memo) - 1
        _catalan_memo.append(
            sum(_catalan_memo[i] * _catalan_memo[m - i] for i in range(m + 1))
        )
    return _catalan_memo[n]


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of rank n
    with exactly k left-to-right maxima (equivalently, k cycles).

    Out-of-range arguments return 0 by convention, except the empty case
    ``stirling_first(0, 0) == 1``.  Computed by the recurrence
    ``c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k)``.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    row = [1]  # row for n = 0
    for m in range(1, n + 1):
        prev = row
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            row[j] = prev[j - 1] + (m - 1) * (prev[j] if j < m else 0)
    return row[k]


def narayana(n: int, k: int) -> int:
    """Narayana triangle entry ``(1/k) C(n-1, k-1) C(n, k-1)``; rows sum to
    the Catalan numbers.  Out-of-range arguments return 0."""
    if n < 1 or k < 1 or k > n:
        return 0
    numerator = comb(n - 1, k - 1) * comb(n, k - 1)
    quotient, remainder = divmod(numerator, k)
    if remainder:  # the formula is always integral; guard against misuse
        raise ValueError(f"narayana({n}, {k}) is not integral")
    return quotient


def harmonic(n: int) -> Fraction:
    """The n-th harmonic number as an exact fraction."""
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


@dataclass(frozen=True)
class LrmDistribution:
    """Counts of class members by number of left-to-right maxima.

    ``counts[k - 1]`` is the number of rank-``rank`` members with exactly
    ``k`` maxima; the counts total the class cardinality.
    """

    class_label: PatternClass
    rank: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def mean(self) -> Fraction:
        weighted = sum(k * c for k, c in enumerate(self.counts, 1))
        return Fraction(weighted, self.total)


def _class_members(label: PatternClass, n: int):
    if label is PatternClass.SYM:
        return all_permutations(n)
    return iter(avoiders(n, label.pattern).support())


def lrm_distribution(class_label: PatternClass | str, n: int) -> LrmDistribution:
    """Enumerate the class and histogram its left-to-right maxima counts."""
    label = PatternClass(class_label)
    limit = _MAX_SYM_RANK if label is PatternClass.SYM else _MAX_CATALAN_RANK
    if not 1 <= n <= limit:
        raise ResourceLimit(f"{label.value} distributions are limited to ranks 1..{limit}")
    counts = [0] * n
    for perm in _class_members(label, n):
        counts[lrm_count(perm) - 1] += 1
    return LrmDistribution(class_label=label, rank=n, counts=tuple(counts))


def expected_lrm_closed_form(class_label: PatternClass | str, n: int) -> Fraction:
    """Exact mean number of left-to-right maxima at rank n, by formula."""
    label = PatternClass(class_label)
    if n < 1:
        raise NotSupported("closed forms need rank >= 1")
    if label is PatternClass.SYM:
        return harmonic(n)
    if label is PatternClass.AV123:
        return 2 - Fraction(catalan(n - 1), catalan(n))
    if label in (PatternClass.AV231, PatternClass.AV132, PatternClass.AV213):
        return Fraction(catalan(n + 1), catalan(n)) - 1
    if label in (PatternClass.AV321, PatternClass.AV312):
        return Fraction(n + 1, 2)
    raise NotSupported(f"no closed form for {label!r}")


@dataclass(frozen=True)
class ResultsRow:
    """One summary-table row: a class at rank n with its exact statistics."""

    class_label: PatternClass
    rank: int
    cardinality: int
    distribution: LrmDistribution
    expected_lrm: Fraction
    win_probability: Fraction
    asymptotic_win: Fraction

    def to_json_dict(self) -> dict:
        return {
            "class": self.class_label.value,
            "n": self.rank,
            "cardinality": self.cardinality,
            "histogram": list(self.distribution.counts),
            "e_lrm": str(self.expected_lrm),
            "e_lrm_decimal": round(float(self.expected_lrm), 6),
            "win_probability": str(self.win_probability),
            "win_probability_decimal": round(float(self.win_probability), 6),
            "asymptote": str(self.asymptotic_win),
        }


def results_row(class_label: PatternClass | str, n: int) -> ResultsRow:
    """Statistics of one class at rank n, with the enumerated distribution."""
    label = PatternClass(class_label)
    distribution = lrm_distribution(label, n)
    mean = distribution.mean()
    return ResultsRow(
        class_label=label,
        rank=n,
        cardinality=distribution.total,
        distribution=distribution,
        expected_lrm=mean,
        win_probability=1 / (mean + 1),
        asymptotic_win=ASYMPTOTIC_WIN[label],
    )


#: The four families of the summary table, one representative each.
TABLE_CLASSES = (
    PatternClass.SYM,
    PatternClass.AV123,
    PatternClass.AV231,
    PatternClass.AV321,
)


def results_table(n: int) -> list[ResultsRow]:
    """One row per family at rank n (the equivalent classes share rows)."""
    if not 1 <= n <= _MAX_SYM_RANK:
        raise ResourceLimit(f"summary tables are limited to ranks 1..{_MAX_SYM_RANK}")
    return [results_row(label, n) for label in TABLE_CLASSES]


def results_to_csv(rows: list[ResultsRow]) -> str:
    header = (
        "class,n,cardinality,histogram,e_lrm,e_lrm_decimal,"
        "win_probability,win_probability_decimal,asymptote"
    )
    lines = [header]
    for row in rows:
        histogram = ":".join(str(c) for c in row.distribution.counts)
        lines.append(
            ",".join(
                [
                    row.class_label.value,
                    str(row.rank),
                    str(row.cardinality),
                    histogram,
                    str(row.expected_lrm),
                    f"{float(row.expected_lrm):.6f}",
                    str(row.win_probability),
                    f"{float(row.win_probability):.6f}",
                    str(row.asymptotic_win),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def results_to_json(rows: list[ResultsRow]) -> str:
    return json.dumps([row.to_json_dict() for row in rows], indent=2) + "\n"


def bijection_231_to_213(perm: Perm) -> Perm:
    """Map a 231-avoiding permutation to a 213-avoiding one, preserving the
    multiset of left-to-right maxima values.

    A 231-avoider decomposes as its first entry ``k``, then every smaller
    value (the lower block), then every larger value (the upper block); the
    map keeps ``k``, swaps the two blocks' positions, and recurses into each.
    The left-to-right maxima are ``k`` and, recursively, those of the upper
    block, and they are untouched.
    """
    perm = tuple(perm)
    if contains_pattern(perm, (2, 3, 1)):
        raise NotInDomain(f"{format_word(perm)} contains the pattern 231")

    def swap_blocks(seq: tuple[int, ...]) -> tuple[int, ...]:
        if not seq:
            return ()
        k = seq[0]
        below = sum(1 for v in seq if v < k)
        lower, upper = seq[1 : below + 1], seq[below + 1 :]
        return (k,) + swap_blocks(upper) + swap_blocks(lower)

    return swap_blocks(perm)


@dataclass(frozen=True)
class LemmaCombCheck:
    """Three counts of the same quantity: permutations of rank n whose entry
    right of the maximum exceeds everything left of it."""

    rank: int
    weighted_stirling_sum: int
    factorial_harmonic_form: int
    avoider_count: int

    @property
    def ok(self) -> bool:
        return self.weighted_stirling_sum == self.factorial_harmonic_form == self.avoider_count


def verify_lemma_comb(n: int) -> LemmaCombCheck:
    """Check ``sum (1+i) c(n-1, i) == (n-1)! (1 + H_{n-1})`` against the brute
    count of two-N-one-avoiding permutations of rank n.

    The values for n = 1, 2, 3, ... are 1, 2, 5, 17, 74, ... (A000774).
    """
    if not 1 <= n <= 9:
        raise ResourceLimit("the brute-force side is limited to ranks 1..9")
    weighted = sum((1 + i) * stirling_first(n - 1, i) for i in range(n))
    closed = factorial(n - 1) + sum(factorial(n - 1) // i for i in range(1, n))
    brute = sum(1 for p in all_permutations(n) if is_2n1_avoiding(p))
    return LemmaCombCheck(
        rank=n,
        weighted_stirling_sum=weighted,
        factorial_harmonic_form=closed,
        avoider_count=brute,
    )


@dataclass(frozen=True)
class StarsBarsCheck:
    """Both sides of ``sum C(n-1, k-1) C(n, k-1) == C(2n-1, n)``, plus the
    follow-on identity ``C(2n-1, n) == (2n-1) Catalan(n-1)``."""

    rank: int
    binomial_sum: int
    stars_bars: int
    catalan_form: int

    @property
    def ok(self) -> bool:
        return self.binomial_sum == self.stars_bars == self.catalan_form


def verify_eq_321(n: int) -> StarsBarsCheck:
    """Exact big-integer evaluation of the identity behind the Narayana mean."""
    if n < 1:
        raise ValueError("the identity needs n >= 1")
    lhs = sum(comb(n - 1, k - 1) * comb(n, k - 1) for k in range(1, n + 1))
    rhs = comb(2 * n - 1, n)
    return StarsBarsCheck(
        rank=n,
        binomial_sum=lhs,
        stars_bars=rhs,
        catalan_form=(2 * n - 1) * catalan(n - 1),
    )
