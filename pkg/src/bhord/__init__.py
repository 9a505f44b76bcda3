"""Workbench for the Bachmann-Howard notation system and gap-condition trees.

Decision procedures for term validity, comparison, coefficient-set
membership and tree embeddability with the gap condition, the ordinal
arithmetic the notation supports, the order-reflecting map between terms
and two-label trees, and exhaustive small-instance audit suites.
"""

from .arith import add, big_omega_mul, omega_exp, omega_mul, veblen
from .cset import ThetaConditions, c_member, collapse_monotone_check, e_closure_check, theta_conditions
from .embed import ebar_image_check, embed_term, length_monotone_check, reflection_check
from .enumeration import (
    EnumerationLayer,
    descent_sampler,
    enum_terms,
    enum_trees,
    enum_universe_trees,
    linearity_audit,
    longest_bad_sequence,
    longest_bad_sequence_naive,
    term_layers,
)
from .errors import DomainError, ResourceLimit, UniverseMismatch
from .syntax import (
    LabelOutOfRange,
    ParseError,
    SourceSpan,
    parse_term,
    parse_tree,
    parse_tree_list,
    print_term,
    print_tree,
)
from .terms import (
    OMEGA,
    OMEGA_TERM,
    ZERO,
    Ordering,
    OrdinalTerm,
    RawTerm,
    Sum,
    Theta,
    ValidationReport,
    compare,
    compare_reference,
    dominates_eps,
    e_parts,
    eps_dominated,
    is_valid,
    length,
    leq,
    numeral,
    sort_key,
    validate,
)
from .trees import (
    EMPTY,
    T2,
    TERMS,
    GapTree,
    Leaf,
    Node,
    TreeAlphabet,
    Universe,
    canonical_cmp,
    deep_size,
    ebar,
    height,
    injection_exists,
    kappa,
    multiset_leq,
    nested_universe,
    pi,
    pi_inverse,
    rank,
    supp,
    supp_multiset,
    tree_leq,
    tree_size,
)

__version__ = "0.1.0"
