"""Command-line front end.

Every capability is a subcommand over the plain-text file formats: multiset
files (one permutation per line, optional ``* k`` multiplicity) and strike-set
files (one eligible prefix per line, mixed ranks allowed).  Results go to
standard output, diagnostics to standard error, and behavior is fully
determined by the flags, so identical invocations produce identical bytes.

Exit codes: 0 success (and verified-true for the checking commands), 1 for a
well-formed input whose property failed to verify, 2 for input or usage
errors, 3 when a computation would exceed its resource bounds.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import factorial

from . import grow as grow_mod
from . import stats as stats_mod
from .engine import annotate, format_probability, play
from .errors import BestChoiceError, InputError, ResourceLimit
from .indifference import Method, is_strategy_indifferent
from .perms import (
    PermMultiset,
    all_permutations,
    format_multiset,
    format_perm,
    parse_multiset_text,
)
from .prefix_tree import (
    StrikeSet,
    build_prefix_tree,
    count_maximal_antichains,
    enumerate_maximal_antichains,
    format_word,
    parse_strike_set_text,
    tree_to_dot,
    tree_to_json,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def parse_multiset_file(path: str) -> PermMultiset:
    """Load a multiset file; the rank is inferred from the first data line."""
    return parse_multiset_text(_read_text(path), source=path)


def parse_strike_set_file(path: str) -> StrikeSet:
    """Load a strike-set file."""
    return parse_strike_set_text(_read_text(path), source=path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bestchoice",
        description="Exact analysis of best-choice stopping games over prefix trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tree = sub.add_parser("tree", help="emit the prefix tree of a given rank")
    p_tree.add_argument("--n", type=int, required=True, help="tree rank")
    p_tree.add_argument("--annotate", metavar="FILE", help="multiset file to project onto the tree")
    p_tree.add_argument("--format", choices=("dot", "json"), default="dot")

    p_anti = sub.add_parser("antichains", help="list or count maximal antichains")
    p_anti.add_argument("--n", type=int, required=True, help="tree rank")
    p_anti.add_argument("--count-only", action="store_true")
    p_anti.add_argument(
        "--budget",
        type=int,
        default=1_000_000,
        help="refuse to materialize more antichains than this (default 1000000)",
    )

    p_check = sub.add_parser("check", help="decide whether a game is strategy-indifferent")
    p_check.add_argument("file", help="multiset file defining the game")
    p_check.add_argument(
        "--method",
        choices=("cover-sum", "chain-partition", "brute-force"),
        default="cover-sum",
    )

    p_grow = sub.add_parser("grow", help="grow a game from a bine of competitors")
    p_grow.add_argument("file", help="multiset file holding the bine")
    p_grow.add_argument("--map", choices=("phi", "phi-alt"), default="phi", dest="growth")

    p_bine = sub.add_parser("bine", help="extract the bine of competitors from a game")
    p_bine.add_argument("file", help="multiset file defining the game")

    p_play = sub.add_parser("play", help="play a strategy against every ordering of a game")
    p_play.add_argument("file", help="multiset file defining the game")
    p_play.add_argument("--strategy", metavar="STRIKEFILE", required=True)

    p_stats = sub.add_parser("stats", help="left-to-right maxima statistics of a class")
    p_stats.add_argument(
        "--class",
        dest="class_label",
        choices=[c.value for c in stats_mod.PatternClass] + ["all"],
        default="all",
    )
    p_stats.add_argument("--n", type=int, required=True, help="rank of the class")
    p_stats.add_argument("--format", choices=("csv", "json"), default="csv")

    p_ident = sub.add_parser("identities", help="verify the counting identities up to a rank")
    p_ident.add_argument("--n", type=int, required=True)

    return parser


def _cmd_tree(args: argparse.Namespace) -> int:
    tree = build_prefix_tree(args.n)
    if args.annotate:
        tree = annotate(tree, parse_multiset_file(args.annotate))
    text = tree_to_json(tree) if args.format == "json" else tree_to_dot(tree)
    sys.stdout.write(text)
    return EXIT_OK


def _cmd_antichains(args: argparse.Namespace) -> int:
    tree = build_prefix_tree(args.n)
    if args.count_only:
        print(count_maximal_antichains(tree))
        return EXIT_OK
    for strikes in enumerate_maximal_antichains(tree, max_antichains=args.budget):
        print(" ".join(format_word(p) for p in strikes))
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    game = parse_multiset_file(args.file)
    method = Method(args.method.replace("-", "_"))
    verdict = is_strategy_indifferent(game, method)
    print(json.dumps(verdict.to_json_dict()))
    return EXIT_OK if verdict.indifferent else EXIT_FALSIFIED


def _cmd_grow(args: argparse.Namespace) -> int:
    bine = parse_multiset_file(args.file)
    game = grow_mod.grow_game(bine, grow_mod.GrowthMap(args.growth))
    sys.stdout.write(format_multiset(game))
    return EXIT_OK


def _cmd_bine(args: argparse.Namespace) -> int:
    game = parse_multiset_file(args.file)
    sys.stdout.write(format_multiset(grow_mod.bine_of_competitors(game)))
    return EXIT_OK


def _cmd_play(args: argparse.Namespace) -> int:
    game = parse_multiset_file(args.file)
    strikes = parse_strike_set_file(args.strategy)
    wins = 0
    for perm, mult in game.items():
        outcome = play(perm, strikes)
        wins += mult * outcome.won
        suffix = f" * {mult}" if mult > 1 else ""
        stop = "-" if outcome.stop_position is None else str(outcome.stop_position)
        value = "-" if outcome.selected_value is None else str(outcome.selected_value)
        status = "win" if outcome.won else "loss"
        print(f"{format_perm(perm)}{suffix}: {status} stop={stop} value={value}")
    fraction = Fraction(wins, game.cardinality)
    print(f"win fraction: {format_probability(fraction)}")
    return EXIT_OK


def _cmd_stats(args: argparse.Namespace) -> int:
    if args.class_label == "all":
        rows = stats_mod.results_table(args.n)
    else:
        rows = [stats_mod.results_row(args.class_label, args.n)]
    if args.format == "json":
        sys.stdout.write(stats_mod.results_to_json(rows))
    else:
        sys.stdout.write(stats_mod.results_to_csv(rows))
    return EXIT_OK


def _cmd_identities(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise InputError("--n must be >= 1")
    all_ok = True

    for n in range(1, min(args.n, 9) + 1):
        check = stats_mod.verify_lemma_comb(n)
        all_ok &= check.ok
        print(
            f"lemma-comb n={n}: {'ok' if check.ok else 'MISMATCH'} "
            f"weighted={check.weighted_stirling_sum} "
            f"closed={check.factorial_harmonic_form} "
            f"avoiders={check.avoider_count}"
        )

    for n in range(1, args.n + 1):
        check = stats_mod.verify_eq_321(n)
        all_ok &= check.ok
        print(
            f"eq-321 n={n}: {'ok' if check.ok else 'MISMATCH'} "
            f"lhs={check.binomial_sum} rhs={check.stars_bars} "
            f"catalan-form={check.catalan_form}"
        )

    # Sizes of the games grown from the full symmetric-group bines: the
    # A000774 prefix.  Cross-checked against the grown-game arithmetic
    # wherever the bine is small enough to enumerate.
    prefix = [_a000774(n - 1) for n in range(1, args.n + 1)]
    print("A000774 prefix:", " ".join(str(v) for v in prefix))
    crosschecked = True
    for rank in range(2, min(args.n, 9) + 1):
        bine = PermMultiset.from_perms(all_permutations(rank - 1), rank=rank - 1)
        crosschecked &= grow_mod.game_size(bine) == prefix[rank - 1]
    all_ok &= crosschecked
    print(f"A000774 game-size crosscheck: {'ok' if crosschecked else 'MISMATCH'}")

    return EXIT_OK if all_ok else EXIT_FALSIFIED


def _a000774(n: int) -> int:
    """n! * (1 + H_n), as an exact integer."""
    return factorial(n) + sum(factorial(n) // i for i in range(1, n + 1))


_COMMANDS = {
    "tree": _cmd_tree,
    "antichains": _cmd_antichains,
    "check": _cmd_check,
    "grow": _cmd_grow,
    "bine": _cmd_bine,
    "play": _cmd_play,
    "stats": _cmd_stats,
    "identities": _cmd_identities,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BestChoiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
