"""Capacity of asymmetric binary-input channels.

Two independent methods (golden-section search on the concave objective and
Blahut-Arimoto alternating maximization) cross-validate each other; a
brute-force grid scan serves as a test-time oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .channel import LN2, Channel, _mi_nats, _mi_nats_grid

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CapacityResult:
    capacity: float            # bits
    alpha_star: float
    method: str                # golden_section | blahut_arimoto | grid_oracle
    iterations: int
    bracket_width: float       # final uncertainty in alpha (0 where n/a)
    converged: bool = True
    gap_bits: float = 0.0      # Blahut-Arimoto upper/lower capacity gap


def capacity_golden(w: Channel, tol_alpha: float = 1e-12) -> CapacityResult:
    """Maximize I(W; alpha) over [0, 1] by golden-section search.

    I(W; alpha) is concave in alpha, so the search bracket is guaranteed to
    contain a maximizer.  The reported capacity is the best objective value
    actually observed, never an interpolation.
    """
    if tol_alpha <= 0.0:
        raise ValueError("tol_alpha must be positive")
    p, q = w.p, w.q
    if np.array_equal(p, q):
        # flat objective: every prior is optimal, report the canonical one
        return CapacityResult(0.0, 0.5, "golden_section", 0, 0.0)

    a, b = 0.0, 1.0
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc = _mi_nats(p, q, c)
    fd = _mi_nats(p, q, d)
    best_a, best_f = (c, fc) if fc >= fd else (d, fd)
    iters = 0
    while b - a > tol_alpha:
        iters += 1
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INVPHI * (b - a)
            fc = _mi_nats(p, q, c)
            if fc > best_f:
                best_a, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INVPHI * (b - a)
            fd = _mi_nats(p, q, d)
            if fd > best_f:
                best_a, best_f = d, fd
    mid = 0.5 * (a + b)
    fmid = _mi_nats(p, q, mid)
    if fmid > best_f:
        best_a, best_f = mid, fmid
    return CapacityResult(best_f / LN2, best_a, "golden_section", iters, b - a)


def capacity_blahut_arimoto(
    w: Channel, tol_bits: float = 1e-12, max_iter: int = 10000
) -> CapacityResult:
    """Blahut-Arimoto iteration restricted to a binary input alphabet.

    Terminates when the standard gap between the max-divergence upper bound
    and the mutual-information lower bound drops below ``tol_bits``; hitting
    ``max_iter`` first is reported via ``converged=False``, never silently.
    """
    if tol_bits <= 0.0:
        raise ValueError("tol_bits must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    p, q = w.p, w.q
    live = (p > 0.0) | (q > 0.0)
    p, q = p[live], q[live]
    tol_nats = tol_bits * LN2

    alpha = 0.5
    lower = 0.0
    gap = 0.0
    for it in range(1, max_iter + 1):
        r = alpha * p + (1.0 - alpha) * q
        # relative entropies D(p||r), D(q||r); W(y|x)=0 terms contribute 0
        with np.errstate(divide="ignore", invalid="ignore"):
            d0 = float(np.sum(xlogy(p, p) - xlogy(p, r)))
            d1 = float(np.sum(xlogy(q, q) - xlogy(q, r)))
        lower = alpha * d0 + (1.0 - alpha) * d1
        upper = max(d0, d1)
        gap = upper - lower
        if gap <= tol_nats:
            return CapacityResult(
                lower / LN2, alpha, "blahut_arimoto", it, 0.0, True, gap / LN2
            )
        z0 = alpha * math.exp(d0)
        z1 = (1.0 - alpha) * math.exp(d1)
        alpha = z0 / (z0 + z1)
    return CapacityResult(
        lower / LN2, alpha, "blahut_arimoto", max_iter, 0.0, False, gap / LN2
    )


def capacity_grid_oracle(w: Channel, step: float = 1e-6) -> CapacityResult:
    """Exhaustive maximum of I(W; alpha) over the grid {0, step, ..., 1}.

    Test-time ground truth only: O(1/step) evaluations, objective error
    O(step^2) by concavity.
    """
    if not 0.0 < step <= 0.01:
        raise ValueError("step must lie in (0, 0.01]")
    n = int(round(1.0 / step))
    alphas = np.linspace(0.0, 1.0, n + 1)
    best_val = -np.inf
    best_alpha = 0.5
    chunk = 100_000
    for lo in range(0, alphas.size, chunk):
        block = alphas[lo : lo + chunk]
        vals = _mi_nats_grid(w.p, w.q, block)
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val = float(vals[k])
            best_alpha = float(block[k])
    if best_val <= 0.0:
        best_alpha = 0.5
    return CapacityResult(best_val / LN2, best_alpha, "grid_oracle", n + 1, step)
