"""Kendall tau permutation codes: metric, counting, bounds and a t-error-correcting construction."""

from .bounds import BoundsReport, bounds_report
from .codebook import load_code, save_code, verify_code
from .construction import RankCode, build_code, decode, min_kendall_distance
from .enumeration import (
    exact_optimal_size, kendall_ball_volume, q_count, weight_distribution,
)
from .errors import CapExceeded
from .perm import (
    InversionVector, Permutation, compose, from_inversion_vector, inverse,
    inversion_count, kendall_distance, to_inversion_vector,
)

__version__ = "0.1.0"
