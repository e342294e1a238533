"""Randomized verification harness for the capacity bounds.

Samples reproducible batches of asymmetric channels, computes Z and the true
capacity for each, and checks every bound that is supposed to hold: the
generalized sandwich, the prior-dependent intermediate lower bound, and
cross-method solver agreement on a subsample.  The theorems say violations
cannot exist; any recorded violation therefore flags an implementation bug.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .bounds import gen_lower, gen_upper
from .capacity import capacity_blahut_arimoto, capacity_golden
from .channel import (
    LN2,
    Channel,
    _mi_nats_grid,
    bec,
    bhattacharyya,
    binary_bhattacharyya,
    binary_entropy,
    bsc,
    z_channel,
)

SANDWICH_TOL = 1e-7        # bits; dominated by capacity-solver tolerance
SCALAR_TOL = 1e-9          # bits; pure inequality evaluations
CROSS_CHECK_TOL = 1e-8     # bits; golden vs Blahut-Arimoto disagreement
CROSS_CHECK_EVERY = 100    # 1% subsample

SAMPLERS = ("dirichlet_uniform", "sparse", "near_degenerate")

# 17 priors {0, 1/16, ..., 1} at which the intermediate bound is checked
_ALPHA_GRID = np.linspace(0.0, 1.0, 17)

_HIST_BINS = np.linspace(0.0, 1.0, 21)


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 42
    trials: int = 100_000
    output_sizes: tuple[int, ...] = (2, 3, 4, 8, 16)
    sampler: str = "dirichlet_uniform"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.output_sizes or any(n < 2 for n in self.output_sizes):
            raise ValueError("every output size must be >= 2")
        if self.sampler not in SAMPLERS:
            raise ValueError(f"unknown sampler {self.sampler!r}")


@dataclass
class TrialBatchReport:
    config: TrialConfig
    violations: list[dict] = field(default_factory=list)
    worst_lower_margin: float = np.inf   # min over trials of C - gen_lower(Z)
    worst_upper_margin: float = np.inf   # min over trials of gen_upper(Z) - C
    lower_gap_hist: list[int] = field(default_factory=lambda: [0] * 20)
    upper_gap_hist: list[int] = field(default_factory=lambda: [0] * 20)

    def to_dict(self) -> dict:
        return {
            "config": {
                "seed": self.config.seed,
                "trials": self.config.trials,
                "output_sizes": list(self.config.output_sizes),
                "sampler": self.config.sampler,
            },
            "violations": self.violations,
            "worst_lower_margin": self.worst_lower_margin,
            "worst_upper_margin": self.worst_upper_margin,
            "histogram_bin_edges": list(_HIST_BINS),
            "lower_gap_hist": self.lower_gap_hist,
            "upper_gap_hist": self.upper_gap_hist,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    # per-trial stream keyed on (master seed, trial index): worker count and
    # execution order cannot affect the sampled channels
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def sample_channel(rng: np.random.Generator, n_outputs: int, sampler: str) -> Channel:
    """Draw one random channel.

    dirichlet_uniform: p and q independently uniform on the simplex.
    sparse: uniform rows with a random subset of entries zeroed, then
    renormalized (exercises the 0*log(0) code paths).
    near_degenerate: q is a small multiplicative perturbation of p, giving
    Z close to 1 and capacity close to 0.
    """
    if n_outputs < 2:
        raise ValueError("n_outputs must be >= 2")
    ones = np.ones(n_outputs)
    if sampler == "dirichlet_uniform":
        p = rng.dirichlet(ones)
        q = rng.dirichlet(ones)
    elif sampler == "sparse":
        p = rng.dirichlet(ones)
        q = rng.dirichlet(ones)
        for row in (p, q):
            keep = rng.random(n_outputs) < 0.6
            if not keep.any():
                keep[rng.integers(n_outputs)] = True
            row[~keep] = 0.0
            row /= row.sum()
    elif sampler == "near_degenerate":
        p = rng.dirichlet(ones)
        eps = 10.0 ** rng.uniform(-6.0, -2.0)
        q = p * (1.0 + eps * rng.standard_normal(n_outputs))
        np.clip(q, 0.0, None, out=q)
        q /= q.sum()
    else:
        raise ValueError(f"unknown sampler {sampler!r}")
    return Channel(p, q)


_ALPHA_GRID_H = np.array([binary_entropy(a, "bits") for a in _ALPHA_GRID])
_ALPHA_GRID_ZB = np.array([binary_bhattacharyya(a) for a in _ALPHA_GRID])


def _intermediate_lower_bounds(z: float) -> np.ndarray:
    """H_b(alpha) - Z_b(alpha)*Z in bits on the 17-point prior grid."""
    return _ALPHA_GRID_H - _ALPHA_GRID_ZB * z


def run_verification(cfg: TrialConfig) -> TrialBatchReport:
    """Run the full property batch; deterministic given the config."""
    report = TrialBatchReport(config=cfg)
    sizes = cfg.output_sizes

    def record(trial, name, margin, w):
        report.violations.append(
            {
                "trial": trial,
                "property": name,
                "margin": margin,
                "p": [float(v) for v in w.p],
                "q": [float(v) for v in w.q],
            }
        )

    for i in range(cfg.trials):
        rng = _trial_rng(cfg.seed, i)
        n = int(sizes[rng.integers(len(sizes))])
        w = sample_channel(rng, n, cfg.sampler)
        z = min(bhattacharyya(w), 1.0)
        cap = capacity_golden(w, tol_alpha=1e-9)
        c = cap.capacity

        lower_margin = c - gen_lower(z)
        upper_margin = gen_upper(z) - c
        if lower_margin < -SANDWICH_TOL:
            record(i, "capacity_above_gen_lower", lower_margin, w)
        if upper_margin < -SANDWICH_TOL:
            record(i, "capacity_below_gen_upper", upper_margin, w)
        report.worst_lower_margin = min(report.worst_lower_margin, lower_margin)
        report.worst_upper_margin = min(report.worst_upper_margin, upper_margin)
        report.lower_gap_hist[_bin_index(lower_margin)] += 1
        report.upper_gap_hist[_bin_index(upper_margin)] += 1

        # prior-dependent intermediate bound I(W;a) >= H_b(a) - Z_b(a)*Z
        mi = _mi_nats_grid(w.p, w.q, _ALPHA_GRID) / LN2
        worst = float(np.min(mi - _intermediate_lower_bounds(z)))
        if worst < -SCALAR_TOL:
            record(i, "intermediate_prior_bound", worst, w)

        if i % CROSS_CHECK_EVERY == 0:
            ba = capacity_blahut_arimoto(w, tol_bits=1e-10)
            diff = abs(ba.capacity - c)
            if diff > CROSS_CHECK_TOL:
                record(i, "solver_cross_check", diff, w)

    return report


def _bin_index(gap: float) -> int:
    idx = int(np.searchsorted(_HIST_BINS, gap, side="right")) - 1
    return min(max(idx, 0), len(_HIST_BINS) - 2)


_FAMILIES = {"bsc": bsc, "bec": bec, "zchannel": z_channel}


def tightness_scan(family: str, grid_step: float):
    """Sweep a channel family's parameter over (0, 1).

    Returns a list of (parameter, capacity, Z, gen_lower, gen_upper) rows
    showing where each generalized bound is tight: the lower bound on the
    erasure family, the upper bound on the symmetric family, neither on the
    asymmetric Z-channel family.
    """
    if not 0.0 < grid_step <= 0.1:
        raise ValueError("grid_step must lie in (0, 0.1]")
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    build = _FAMILIES[family]
    rows = []
    n = int(round(1.0 / grid_step))
    for k in range(1, n):
        param = k * grid_step
        w = build(param)
        z = min(bhattacharyya(w), 1.0)
        c = capacity_golden(w, tol_alpha=1e-12).capacity
        rows.append((param, c, z, gen_lower(z), gen_upper(z)))
    return rows
