"""Greedy trees, walk counts and spectral functionals for degree sequences.

The package answers questions of the form: among all trees with a fixed
degree sequence, which one has the most closed walks of every length, the
largest Estrada index, the largest spectral radius?  The extremal tree is
the greedy tree, built level by level with the largest degrees closest to
the root, and everything here either constructs it, counts walks on it, or
verifies its extremality exhaustively on small cases.
"""

from .degree_sequences import (
    DegreeSequence,
    LeveledDegreeSequence,
    dominant_for_independence_number,
    dominant_for_leaf_count,
    dominant_for_max_degree,
    format_degree_sequence,
    majorizes,
    parse_degree_sequence,
    star_product,
    validate_degree_sequence,
)
from .enumeration import (
    CAP_ENV_VAR,
    DEFAULT_ENUMERATION_CAP,
    VerificationReport,
    build_remark_pair,
    enumerate_trees,
    resolve_cap,
    tree_degree_sequences,
    verify_greedy_maximality,
    verify_majorization_monotonicity,
    verify_spectral_corollaries,
    verify_volkmann_conjecture,
)
from .errors import (
    AlreadyEqualError,
    CapExceededError,
    GreedySpectraError,
    InvalidBoundsError,
    InvalidMoveError,
    LengthMismatchError,
    LevelMismatchError,
    MethodDisagreementError,
    NonConvergenceError,
    NotAnEdgeError,
    NotMajorizedError,
    NotRealizableError,
    RootNotInTreeError,
)
from .spectral import (
    PowerSeriesFunctional,
    Spectrum,
    characteristic_polynomial,
    eigenvalues,
    estrada_index,
    evaluate_char_poly,
    evaluate_functional,
    spectral_radius,
)
from .transformations import (
    BranchMove,
    all_branch_moves,
    chain_to_json,
    majorization_chain,
    majorization_step,
    midpoint_root,
    move_branch,
)
from .trees import (
    Forest,
    Tree,
    build_edge_rooted_level_greedy,
    build_greedy_tree,
    build_level_greedy_forest,
    build_level_greedy_tree,
    build_volkmann_tree,
    canonical_code,
    centers,
    forest_leveled_degree_sequence,
    from_json,
    greedy_positions,
    is_greedy_labeled,
    is_isomorphic,
    leveled_degree_sequence,
    to_dot,
    to_json,
    tree_from_dict,
    tree_to_dict,
)
from .walks import (
    LevelSequence,
    MomentVector,
    closed_walks_by_level_sequence,
    closed_walks_from_directed_edge,
    first_strict_difference,
    spectral_moment,
    spectral_moments_up_to,
    total_walks,
    walks_by_level_sequence,
)

__version__ = "0.1.0"
