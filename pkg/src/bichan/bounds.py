"""Capacity bounds in terms of the Bhattacharyya parameter.

Implements the classical sandwich log2(2/(1+Z)) <= I <= sqrt(1-Z^2), the
tighter pair 1-Z <= C <= 1-H_b((1-sqrt(1-Z^2))/2) valid for arbitrary
(asymmetric) binary-input channels, the convex bijection F linking binary
entropy to the binary Bhattacharyya function, and the scalar helper
functions appearing in the proofs of those bounds.  Everything here takes
plain scalars so the same code serves channel analysis and curve emission.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import LN2, Channel, bhattacharyya, binary_bhattacharyya, binary_entropy


def _check_z(z: float) -> float:
    # allow float-roundoff spill from sums like Z = sum(sqrt(p*q))
    if not -1e-12 <= z <= 1.0 + 1e-12:
        raise ValueError(f"z={z!r} outside [0, 1]")
    return min(max(z, 0.0), 1.0)


def _small_root(z: float) -> float:
    """(1 - sqrt(1 - z^2)) / 2 without cancellation near z = 1."""
    return 0.5 * z * z / (1.0 + math.sqrt((1.0 - z) * (1.0 + z)))


@dataclass(frozen=True)
class BoundSet:
    """The four capacity bounds evaluated at a single Bhattacharyya value."""

    z: float
    arikan_lower: float
    arikan_upper: float
    gen_lower: float
    gen_upper: float


def arikan_lower(z: float) -> float:
    """Classical lower bound log2(2/(1+z)) in bits."""
    z = _check_z(z)
    return 1.0 - math.log1p(z) / LN2


def arikan_upper(z: float) -> float:
    """Classical upper bound sqrt(1-z^2)."""
    z = _check_z(z)
    return math.sqrt((1.0 - z) * (1.0 + z))


def gen_lower(z: float) -> float:
    """Generalized lower bound 1-z, valid for asymmetric channels."""
    z = _check_z(z)
    return 1.0 - z


def gen_upper(z: float) -> float:
    """Generalized upper bound 1 - H_b((1-sqrt(1-z^2))/2) in bits."""
    z = _check_z(z)
    return 1.0 - binary_entropy(_small_root(z), "bits")


def entropy_from_bhattacharyya(x: float) -> float:
    """The convex bijection F with F(Z_b(p)) = H_b(p), in bits."""
    x = _check_z(x)
    return binary_entropy(_small_root(x), "bits")


def check_entropy_bhattacharyya_inequality(p: float) -> float:
    """Margin Z_b(p) - H_b(p) in bits; nonnegative, zero at p in {0, 1/2, 1}."""
    return binary_bhattacharyya(p) - binary_entropy(p, "bits")


def check_weighted_entropy_inequality(x: float, y: float) -> float:
    """Margin of the weighted two-point form of the entropy bound.

    For positive x, y with x*y <= 1 returns
    2*sqrt(x*y) - (x+y)*H_b(x/(x+y)) with the entropy in bits; the margin
    is nonnegative and vanishes exactly when x == y.
    """
    if x <= 0.0 or y <= 0.0:
        raise ValueError("x and y must be positive")
    if x * y > 1.0 + 1e-12:
        raise ValueError(f"x*y={x * y!r} exceeds 1")
    return 2.0 * math.sqrt(x * y) - (x + y) * binary_entropy(x / (x + y), "bits")


def proof_g(t: float) -> float:
    """(1-t)*ln(1-t) - t*ln(t); nonnegative on (0, 1/2], antisymmetric about 1/2."""
    if not 0.0 < t < 1.0:
        raise ValueError(f"t={t!r} outside (0, 1)")
    return (1.0 - t) * math.log(1.0 - t) - t * math.log(t)


def proof_f(alpha: float, beta: float) -> float:
    """H_b(alpha) - H_b((1 - sqrt(1 - 4*alpha*(1-alpha)*beta))/2) in bits.

    Symmetric in alpha about 1/2 and nondecreasing in alpha on [0, 1/2]
    for every fixed beta; its maximum over alpha sits at 1/2, which is what
    turns the prior-dependent bound into the capacity bound.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha={alpha!r} outside [0, 1]")
    if not 0.0 <= beta <= 1.0:
        raise ValueError(f"beta={beta!r} outside [0, 1]")
    zb = binary_bhattacharyya(alpha)
    return binary_entropy(alpha, "bits") - entropy_from_bhattacharyya(
        zb * math.sqrt(beta)
    )


def proof_h(t: float) -> float:
    """ln((1+t)/(1-t)) - 2t/(1+t^2); nonnegative and increasing on [0, 1)."""
    if not 0.0 <= t < 1.0:
        raise ValueError(f"t={t!r} outside [0, 1)")
    return math.log((1.0 + t) / (1.0 - t)) - 2.0 * t / (1.0 + t * t)


def evaluate_bound_set(z: float) -> BoundSet:
    """All four bounds at z, as one record."""
    z = _check_z(z)
    return BoundSet(
        z=z,
        arikan_lower=arikan_lower(z),
        arikan_upper=arikan_upper(z),
        gen_lower=gen_lower(z),
        gen_upper=gen_upper(z),
    )


def channel_bound_set(w: Channel) -> BoundSet:
    """Convenience wrapper: bounds at the channel's own Bhattacharyya parameter."""
    return evaluate_bound_set(bhattacharyya(w))
