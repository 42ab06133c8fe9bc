"""Continued-fraction periods of SL(2,Z) matrix eigenvector slopes.

Exact enumeration of unimodular matrices in a norm ball, periodic
continued-fraction expansion of their eigenvector slopes by two
independent exact algorithms, cyclic palindrome/reversal checks on the
periods, and per-radius statistics with log-law fits.
"""
from .surd import (
    RationalTermination,
    Surd,
    SurdError,
    conjugate,
    euclid_step,
    isqrt,
    normalize,
    surd_eq,
    surd_floor,
)
from .lattice import (
    MatrixClass,
    UniMatrix,
    brute_ball_oracle,
    classify,
    eigen_slope,
    enumerate_ball,
    solve_unimodular,
)
from .cfrac import (
    Branch,
    Expansion,
    QuadForm,
    StepLimitExceeded,
    check_divisibility,
    expand_qform,
    expand_surd,
    khinchin_bound,
    qform_root,
    qform_step,
)
from .cycles import (
    canonical_rotation,
    cycle_matrix,
    is_cyclic_palindrome,
    is_cyclic_reverse,
    shift_distance,
    verify_fixed_point,
)
from .stats import (
    FitResult,
    StatsRow,
    accumulate,
    fit_log,
    gauss_kuzmin,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Branch", "Expansion", "FitResult", "MatrixClass", "QuadForm",
    "RationalTermination", "StatsRow", "StepLimitExceeded", "Surd",
    "SurdError", "UniMatrix", "accumulate", "brute_ball_oracle",
    "canonical_rotation", "check_divisibility", "classify", "conjugate",
    "cycle_matrix", "eigen_slope", "enumerate_ball", "euclid_step",
    "expand_qform", "expand_surd", "fit_log", "gauss_kuzmin",
    "is_cyclic_palindrome", "is_cyclic_reverse", "isqrt", "khinchin_bound",
    "normalize", "qform_root", "qform_step", "shift_distance",
    "solve_unimodular", "surd_eq", "surd_floor", "sweep",
    "verify_fixed_point",
]
