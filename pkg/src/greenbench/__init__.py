"""Workbench for transformation semigroups and finite automata.

Computes syntactic semigroups, decides Green-relation triviality,
constructs extremal witnesses, and verifies the tight bounds n!,
floor(e(n-1)!) and 2^(n-1) at desk scale.
"""

from .automata import (
    DEFAULT_SIMON_CAP,
    DEFAULT_SUBSET_CAP,
    AnalysisReport,
    Dfa,
    Nfa,
    SimonResult,
    accepts,
    analyze,
    determinize,
    dfa_from_transformations,
    is_partially_ordered,
    letter_components,
    letter_transformation,
    minimize,
    nfa_accepts,
    nondecreasing_certificate,
    quotient_complexity,
    reachable_subsets,
    relabel_states,
    reversal_complexity,
    reverse,
    run_word,
    simon_component_check,
    syntactic_semigroup,
    transition_semigroup,
    trim_reachable,
)
from .bounds import (
    DEFAULT_BRUTE_FORCE_CAP,
    DEFAULT_ENUMERATION_CAP,
    BoundsRow,
    all_nondecreasing,
    bounds_report,
    floor_e_factorial,
    j_trivial_bound,
    max_j_trivial_submonoid,
)
from .errors import (
    DimensionError,
    GreenbenchError,
    InternalError,
    ParseError,
    ResourceLimitError,
)
from .formats import (
    emit_bundle,
    emit_dfa,
    emit_nfa,
    emit_transformation_list,
    parse_dfa,
    parse_nfa,
    parse_transformation,
    parse_transformation_list,
)
from .partitions import (
    DEFAULT_PARTITION_CAP,
    Partition,
    all_partitions,
    coarsest_with_maxima,
    orbit_fiber,
    orbit_fiber_size,
    orbits,
)
from .semigroups import (
    DEFAULT_CLOSURE_CAP,
    TransformationSemigroup,
    adjoin_successor,
    close,
    is_h_trivial,
    is_j_trivial,
    is_l_trivial,
    is_r_trivial,
    monoid_completion,
    orbit_join_property,
    principal_ideals,
)
from .transformations import (
    Transformation,
    TransformationProfile,
    compose,
    constant,
    fixed_points,
    identity,
    is_idempotent,
    is_nondecreasing,
    profile,
    range_of,
    saturating_successor,
    singular,
)
from .witnesses import (
    DEFAULT_WITNESS_CAP,
    WITNESS_KINDS,
    WitnessBundle,
    extremal_j_trivial_monoid,
    fixing_generator,
    j_trivial_generators,
    minimal_generating_subset,
    nondecreasing_generators,
    r_trivial_witness,
    reversal_witness,
    subsets_with_top,
    witness_bundle,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundsRow",
    "DEFAULT_BRUTE_FORCE_CAP",
    "DEFAULT_CLOSURE_CAP",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_PARTITION_CAP",
    "DEFAULT_SIMON_CAP",
    "DEFAULT_SUBSET_CAP",
    "DEFAULT_WITNESS_CAP",
    "Dfa",
    "DimensionError",
    "GreenbenchError",
    "InternalError",
    "Nfa",
    "ParseError",
    "Partition",
    "ResourceLimitError",
    "SimonResult",
    "Transformation",
    "TransformationProfile",
    "TransformationSemigroup",
    "WITNESS_KINDS",
    "WitnessBundle",
    "accepts",
    "adjoin_successor",
    "all_nondecreasing",
    "all_partitions",
    "analyze",
    "bounds_report",
    "close",
    "coarsest_with_maxima",
    "compose",
    "constant",
    "determinize",
    "dfa_from_transformations",
    "emit_bundle",
    "emit_dfa",
    "emit_nfa",
    "emit_transformation_list",
    "extremal_j_trivial_monoid",
    "fixed_points",
    "fixing_generator",
    "floor_e_factorial",
    "identity",
    "is_h_trivial",
    "is_idempotent",
    "is_j_trivial",
    "is_l_trivial",
    "is_nondecreasing",
    "is_partially_ordered",
    "is_r_trivial",
    "j_trivial_bound",
    "j_trivial_generators",
    "letter_components",
    "letter_transformation",
    "max_j_trivial_submonoid",
    "minimal_generating_subset",
    "minimize",
    "monoid_completion",
    "nfa_accepts",
    "nondecreasing_certificate",
    "nondecreasing_generators",
    "orbit_fiber",
    "orbit_fiber_size",
    "orbit_join_property",
    "orbits",
    "parse_dfa",
    "parse_nfa",
    "parse_transformation",
    "parse_transformation_list",
    "principal_ideals",
    "profile",
    "quotient_complexity",
    "r_trivial_witness",
    "range_of",
    "reachable_subsets",
    "relabel_states",
    "reversal_complexity",
    "reversal_witness",
    "reverse",
    "run_word",
    "saturating_successor",
    "simon_component_check",
    "singular",
    "subsets_with_top",
    "syntactic_semigroup",
    "transition_semigroup",
    "trim_reachable",
    "witness_bundle",
]
