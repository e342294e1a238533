"""Binary-input discrete memoryless channels and their elementary information quantities.

A channel is described by two conditional laws over a shared N-ary output
alphabet: ``p`` (given input 0) and ``q`` (given input 1).  All scalar
quantities are computed internally in nats; conversion to bits happens only
at the API boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import xlogy

LN2 = float(np.log(2.0))

#: tolerance for probability-vector normalization checks
SUM_TOL = 1e-12


def _as_unit_scale(unit: str) -> float:
    if unit == "bits":
        return 1.0 / LN2
    if unit == "nats":
        return 1.0
    raise ValueError(f"unknown unit {unit!r}, expected 'bits' or 'nats'")


def _check_unit_interval(x: float, name: str) -> float:
    if not (-SUM_TOL <= x <= 1.0 + SUM_TOL):
        raise ValueError(f"{name}={x!r} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


@dataclass(frozen=True)
class Channel:
    """Binary-input channel with output laws ``p`` (input 0) and ``q`` (input 1).

    The arrays are stored read-only; instances are immutable and safe to
    share across threads.  Construction does not validate -- use
    :func:`validate` (or :func:`make_channel`, which raises on bad input).
    """

    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=np.float64).copy()
        q = np.asarray(self.q, dtype=np.float64).copy()
        p.flags.writeable = False
        q.flags.writeable = False
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def n_outputs(self) -> int:
        return self.p.shape[0]


def validate(w: Channel) -> list[str]:
    """Check the Channel invariants, returning a list of violation messages.

    An empty list means the channel is valid.  Callers decide severity;
    nothing is raised here.
    """
    violations = []
    p, q = w.p, w.q
    if p.ndim != 1 or q.ndim != 1:
        violations.append("p and q must be one-dimensional vectors")
        return violations
    if p.shape != q.shape:
        violations.append(f"length mismatch: len(p)={p.shape[0]}, len(q)={q.shape[0]}")
        return violations
    if p.shape[0] < 1:
        violations.append("channel needs at least one output symbol")
        return violations
    for name, v in (("p", p), ("q", q)):
        if not np.all(np.isfinite(v)):
            bad = int(np.flatnonzero(~np.isfinite(v))[0])
            violations.append(f"{name}[{bad}] is not finite: {v[bad]!r}")
            continue
        for idx in np.flatnonzero((v < 0.0) | (v > 1.0)):
            violations.append(f"{name}[{int(idx)}]={v[idx]!r} outside [0, 1]")
        s = float(v.sum())
        if abs(s - 1.0) > SUM_TOL:
            violations.append(f"sum({name})={s!r} differs from 1 by {abs(s - 1.0):.3e}")
    return violations


def make_channel(p, q) -> Channel:
    """Build a Channel and raise ValueError if any invariant fails."""
    w = Channel(np.asarray(p, dtype=np.float64), np.asarray(q, dtype=np.float64))
    violations = validate(w)
    if violations:
        raise ValueError("invalid channel: " + "; ".join(violations))
    return w


def binary_entropy(p: float, unit: str = "bits") -> float:
    """Binary entropy -p*log(p) - (1-p)*log(1-p) with the 0*log(0)=0 convention."""
    p = _check_unit_interval(p, "p")
    h = -(xlogy(p, p) + xlogy(1.0 - p, 1.0 - p))
    return float(h) * _as_unit_scale(unit)


def binary_bhattacharyya(p: float) -> float:
    """Binary Bhattacharyya function sqrt(4*p*(1-p))."""
    p = _check_unit_interval(p, "p")
    return float(np.sqrt(4.0 * p * (1.0 - p)))


def mixture_weights(w: Channel, alpha: float) -> np.ndarray:
    """Output marginal r = alpha*p + (1-alpha)*q induced by the input prior."""
    alpha = _check_unit_interval(alpha, "alpha")
    return alpha * w.p + (1.0 - alpha) * w.q


def _binary_entropy_nats(t: np.ndarray) -> np.ndarray:
    return -(xlogy(t, t) + xlogy(1.0 - t, 1.0 - t))


def _mi_nats(p: np.ndarray, q: np.ndarray, alpha: float) -> float:
    """I(W; alpha) in nats.  Assumes a valid channel; skips r_n = 0 terms."""
    r = alpha * p + (1.0 - alpha) * q
    mask = r > 0.0
    r = r[mask]
    t = np.clip(alpha * p[mask] / r, 0.0, 1.0)
    h_alpha = -(xlogy(alpha, alpha) + xlogy(1.0 - alpha, 1.0 - alpha))
    return float(h_alpha - r @ _binary_entropy_nats(t))


def _mi_nats_grid(p: np.ndarray, q: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """Vectorized I(W; alpha) in nats over a 1-D array of priors."""
    a = alphas[:, None]
    r = a * p[None, :] + (1.0 - a) * q[None, :]
    with np.errstate(invalid="ignore", divide="ignore"):
        t = np.where(r > 0.0, a * p[None, :] / np.where(r > 0.0, r, 1.0), 0.0)
    np.clip(t, 0.0, 1.0, out=t)
    cond = np.einsum("ij,ij->i", r, _binary_entropy_nats(t))
    return _binary_entropy_nats(alphas) - cond


def mutual_information(w: Channel, alpha: float, unit: str = "bits") -> float:
    """Mutual information between the channel input and output.

    Parameters
    ----------
    w : Channel
        A valid binary-input channel.
    alpha : float
        Input prior Pr(X = 0), in [0, 1].
    unit : {'bits', 'nats'}

    Returns
    -------
    float
        H_b(alpha) minus the mixture-weighted conditional entropy; zero
        for deterministic inputs (alpha in {0, 1}) and for useless
        channels (p == q).
    """
    alpha = _check_unit_interval(alpha, "alpha")
    return _mi_nats(w.p, w.q, alpha) * _as_unit_scale(unit)


def bhattacharyya(w: Channel) -> float:
    """Channel Bhattacharyya parameter: sum over outputs of sqrt(p_n * q_n)."""
    return float(np.sqrt(w.p * w.q).sum())


# ---------------------------------------------------------------------------
# Standard channel families

def bsc(crossover: float) -> Channel:
    """Binary symmetric channel with the given crossover probability."""
    c = _check_unit_interval(crossover, "crossover")
    return make_channel([1.0 - c, c], [c, 1.0 - c])


def bec(erasure: float) -> Channel:
    """Binary erasure channel; outputs are (0, erasure, 1)."""
    e = _check_unit_interval(erasure, "erasure")
    return make_channel([1.0 - e, e, 0.0], [0.0, e, 1.0 - e])


def z_channel(s: float) -> Channel:
    """Z-channel: input 0 maps to output 0 noiselessly, input 1 hits
    output 0 with probability ``s`` and output 1 otherwise."""
    s = _check_unit_interval(s, "s")
    return make_channel([1.0, 0.0], [s, 1.0 - s])
