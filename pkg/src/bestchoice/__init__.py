"""Exact analysis of best-choice stopping games over prefix trees.

The package constructs games of best choice from multisets of interview rank
orderings, evaluates strike-set strategies exactly, decides strategy
indifference by three equivalent criteria, grows indifferent games from bines
of competitors, and tabulates left-to-right maxima statistics for the
pattern-avoiding permutation classes.
"""

from .errors import (
    BestChoiceError,
    EmptyGame,
    IndexOutOfRange,
    InputError,
    InvalidSequence,
    InvalidStrikeSet,
    NotApplicable,
    NotInDomain,
    NotInTree,
    NotSupported,
    RankMismatch,
    ResourceLimit,
)
from .perms import (
    MAX_ENUM_RANK,
    Perm,
    PermMultiset,
    all_permutations,
    avoiders,
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
from .prefix_tree import (
    PrefixTree,
    StrikeSet,
    build_prefix_tree,
    count_maximal_antichains,
    covers,
    enumerate_maximal_antichains,
    is_eligible,
    is_maximal_antichain,
    parse_strike_set_text,
    tree_to_dot,
    tree_to_json,
    tree_to_json_dict,
)
from .engine import (
    GameOutcome,
    annotate,
    format_probability,
    play,
    strike_projection,
    win_probability,
)
from .indifference import (
    AntichainPair,
    ChainPartition,
    CoverMismatch,
    IndifferenceVerdict,
    Method,
    check_by_antichain_enumeration,
    check_by_chain_partition,
    check_cover_sum,
    is_strategy_indifferent,
    maximal_chain_partition,
)
from .grow import (
    GrowthMap,
    bine_of_competitors,
    expected_lrm,
    game_size,
    grow_game,
    growth_chain,
    indifferent_win_probability,
    phi,
    phi_alt,
    phi_inverse,
)
from .stats import (
    ASYMPTOTIC_WIN,
    LemmaCombCheck,
    LrmDistribution,
    PatternClass,
    ResultsRow,
    StarsBarsCheck,
    bijection_231_to_213,
    catalan,
    expected_lrm_closed_form,
    harmonic,
    lrm_distribution,
    narayana,
    results_row,
    results_table,
    stirling_first,
    verify_eq_321,
    verify_lemma_comb,
)

__version__ = "0.1.0"
