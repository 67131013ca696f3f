"""Exact and asymptotic enumeration of permutations by excedance word."""

from .asymptotics import (
    DIAGONAL_CONSTANT,
    DIAGONAL_GROWTH,
    EPSILON_0,
    LogEstimate,
    SaddlePoint,
    diagonal_estimate,
    f,
    f_inverse,
    in_sector,
    log_estimate_block,
    log_of_count,
    q_general,
    q_specialized,
    saddle_point,
    strict_minimality_check,
)
from .bijections import cln_phi, cycle_to_perm, iota, is_in_E, phi, phi_inverse
from .counting import (
    BruteForceLimitError,
    count_alpha_bruteforce,
    count_block_word,
    count_by_word_bruteforce,
    count_cstar,
    count_cstar_bruteforce,
    stirling2,
)
from .estimators import (
    DiagonalEstimator,
    ExcedanceWordTransformer,
    PermutationStatistics,
    SaddlePointEstimator,
)
from .permutation import (
    CycleDecomposition,
    Permutation,
    avoids_pattern_21_34,
    avoids_pattern_34_21,
    descent_bottoms,
    excedance_set,
    excedance_word,
    has_stretching_pair,
    is_n_cycle,
    standard_cycle_decomposition,
    stretching_pairs,
)
from .series import CoeffTable, coeff_to_count, egf_coefficients

__version__ = "0.1.0"
