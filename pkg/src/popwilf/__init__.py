"""Partially ordered pattern avoidance: counting, boards, bijections,
classification."""

from .bijections import (
    EncodingUndefinedError,
    EncodingWord,
    HypothesisError,
    MalformedWordError,
    VARIANT_P,
    VARIANT_P_PRIME,
    decode,
    encode,
    rank_bijection,
    suitable_positions,
    theorem12_map,
    theorem13_map,
    theorem14_map,
    theorem16_map,
    variant_poset,
    west_map,
    west_map_inverse,
)
from .classify import (
    PopFamily,
    WilfClass,
    WilfClassReport,
    dimitrov_check,
    generate_family,
    gk_reduction_check,
    known_sequences,
    match_sequence,
    pop_from_tuple,
    symmetry_reduce,
    tuple_from_pop,
    wilf_classes,
)
from .ferrers import (
    FerrersBoard,
    NotShapeWilfEquivalentError,
    ShapeWilfReport,
    Transversal,
    boards,
    contains_classical_in_board,
    contains_pop_in_board,
    count_board_avoiders,
    essential_occurrence,
    shape_wilf_check,
    transversals,
)
from .permutation import (
    BudgetError,
    CountSequence,
    Permutation,
    RankOverflowError,
    avoiders,
    contains_pop,
    contains_pop_via_patterns,
    count_avoiders,
    count_avoiders_naive,
    left_multiply_adjacent,
    p_rank,
    p_ranks,
)
from .poset import (
    LabeledPoset,
    PopSyntaxError,
    block_reversal,
    delete_labels,
    disjoint_sum,
    format_pop,
    from_classical,
    induced_subposet,
    ordinal_sum,
    parse_pop,
    standardise,
)

__version__ = "0.1.0"
