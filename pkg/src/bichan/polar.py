"""Recursive single-step channel transforms and bound tracking.

Two uses of a base channel synthesize a degraded ('-') and an upgraded
('+') channel; iterating the construction drives the Bhattacharyya
parameters of the synthesized channels toward 0 or 1.  The synthesized
channels of an asymmetric base need not be symmetric, which is exactly
where capacity bounds that do not assume symmetry apply.  Output symbols
with identical likelihood ratios are merged after every step to keep the
alphabets manageable; the merge is a sufficient-statistic reduction that
preserves Z and I(W; alpha) exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import BoundSet, evaluate_bound_set
from .channel import Channel, bhattacharyya, mutual_information

DEFAULT_ALPHABET_CAP = 10**6


class AlphabetCapError(RuntimeError):
    """Raised when a transform would exceed the output-alphabet cap."""


@dataclass(frozen=True)
class PolarNode:
    """One synthesized channel in the recursion tree.

    ``path`` records the transform choices from the root, '-' then '+'
    in index order.
    """

    path: str
    channel: Channel
    z: float
    sym_capacity: float        # I(W; 1/2) in bits
    bounds: BoundSet


def transform_minus(w: Channel, cap: int = DEFAULT_ALPHABET_CAP) -> Channel:
    """Degraded single-step transform, outputs indexed by (y1, y2)."""
    n = w.n_outputs
    if n * n > cap:
        raise AlphabetCapError(f"transform would produce {n * n} outputs (cap {cap})")
    p, q = w.p, w.q
    pm = 0.5 * (np.outer(p, p) + np.outer(q, q)).ravel()
    qm = 0.5 * (np.outer(p, q) + np.outer(q, p)).ravel()
    return Channel(pm, qm)


def transform_plus(w: Channel, cap: int = DEFAULT_ALPHABET_CAP) -> Channel:
    """Upgraded single-step transform, outputs indexed by (y1, y2, u1)."""
    n = w.n_outputs
    if 2 * n * n > cap:
        raise AlphabetCapError(f"transform would produce {2 * n * n} outputs (cap {cap})")
    p, q = w.p, w.q
    pp = 0.5 * np.concatenate([np.outer(p, p).ravel(), np.outer(q, p).ravel()])
    qp = 0.5 * np.concatenate([np.outer(q, q).ravel(), np.outer(p, q).ravel()])
    return Channel(pp, qp)


def merge_equivalent_outputs(w: Channel) -> Channel:
    """Merge output symbols that carry the same likelihood ratio p_n : q_n.

    Symbols with p_n = q_n = 0 are dropped.  Ratio equality is decided on
    cross-products (p_i*q_j vs p_j*q_i, relative tolerance 1e-13) so zero
    entries compare exactly rather than through division.
    """
    p, q = w.p, w.q
    alive = (p > 0.0) | (q > 0.0)
    p, q = p[alive], q[alive]
    if p.size == 0:
        raise ValueError("channel has no live output symbols")
    order = np.argsort(np.arctan2(q, p), kind="stable")
    p, q = p[order], q[order]

    merged_p: list[float] = []
    merged_q: list[float] = []
    # representative of the current ratio class
    rp, rq = p[0], q[0]
    acc_p, acc_q = p[0], q[0]
    for i in range(1, p.size):
        a = rp * q[i]
        b = p[i] * rq
        if abs(a - b) <= 1e-13 * max(a, b):
            acc_p += p[i]
            acc_q += q[i]
        else:
            merged_p.append(acc_p)
            merged_q.append(acc_q)
            rp, rq = p[i], q[i]
            acc_p, acc_q = p[i], q[i]
    merged_p.append(acc_p)
    merged_q.append(acc_q)
    return Channel(np.array(merged_p), np.array(merged_q))


def polarize(
    w: Channel, depth: int, cap: int = DEFAULT_ALPHABET_CAP
) -> list[PolarNode]:
    """Full binary recursion of the two transforms to the given depth.

    Returns the 2**depth leaves in path order ('-' before '+').  Merging is
    applied after every transform step; the recursion refuses to descend
    past the alphabet cap.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")

    def analyze(path: str, ch: Channel) -> PolarNode:
        z = min(bhattacharyya(ch), 1.0)
        return PolarNode(
            path=path,
            channel=ch,
            z=z,
            sym_capacity=mutual_information(ch, 0.5, "bits"),
            bounds=evaluate_bound_set(z),
        )

    def recurse(path: str, ch: Channel, remaining: int) -> list[PolarNode]:
        if remaining == 0:
            return [analyze(path, ch)]
        minus = merge_equivalent_outputs(transform_minus(ch, cap))
        plus = merge_equivalent_outputs(transform_plus(ch, cap))
        return recurse(path + "-", minus, remaining - 1) + recurse(
            path + "+", plus, remaining - 1
        )

    return recurse("", w, depth)


def conservation_residual(w: Channel, nodes: list[PolarNode]) -> float:
    """|sum of node symmetric capacities - 2^depth * I(base; 1/2)| in bits."""
    depth_capacity = sum(node.sym_capacity for node in nodes)
    return abs(depth_capacity - len(nodes) * mutual_information(w, 0.5, "bits"))
