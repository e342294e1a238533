"""Capacity and Bhattacharyya-parameter toolkit for binary-input DMCs."""

from .bounds import (
    BoundSet,
    arikan_lower,
    arikan_upper,
    channel_bound_set,
    check_entropy_bhattacharyya_inequality,
    check_weighted_entropy_inequality,
    entropy_from_bhattacharyya,
    evaluate_bound_set,
    gen_lower,
    gen_upper,
    proof_f,
    proof_g,
    proof_h,
)
from .capacity import (
    CapacityResult,
    capacity_blahut_arimoto,
    capacity_golden,
    capacity_grid_oracle,
)
from .channel import (
    Channel,
    bec,
    bhattacharyya,
    binary_bhattacharyya,
    binary_entropy,
    bsc,
    make_channel,
    mixture_weights,
    mutual_information,
    validate,
    z_channel,
)
from .harness import TrialBatchReport, TrialConfig, run_verification, sample_channel, tightness_scan
from .polar import (
    AlphabetCapError,
    PolarNode,
    conservation_residual,
    merge_equivalent_outputs,
    polarize,
    transform_minus,
    transform_plus,
)

__all__ = [
    "AlphabetCapError",
    "BoundSet",
    "CapacityResult",
    "Channel",
    "PolarNode",
    "TrialBatchReport",
    "TrialConfig",
    "arikan_lower",
    "arikan_upper",
    "bec",
    "bhattacharyya",
    "binary_bhattacharyya",
    "binary_entropy",
    "bsc",
    "capacity_blahut_arimoto",
    "capacity_golden",
    "capacity_grid_oracle",
    "channel_bound_set",
    "check_entropy_bhattacharyya_inequality",
    "check_weighted_entropy_inequality",
    "conservation_residual",
    "entropy_from_bhattacharyya",
    "evaluate_bound_set",
    "gen_lower",
    "gen_upper",
    "make_channel",
    "merge_equivalent_outputs",
    "mixture_weights",
    "mutual_information",
    "polarize",
    "proof_f",
    "proof_g",
    "proof_h",
    "run_verification",
    "sample_channel",
    "tightness_scan",
    "transform_minus",
    "transform_plus",
    "validate",
    "z_channel",
]

__version__ = "0.1.0"
