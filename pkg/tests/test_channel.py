import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bichan import (
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
)

# frozen high-precision references (40-digit evaluation of the defining formulas)
HB_011_BITS = 0.4999159581645280
ZB_011 = 0.6257795138864806
BSC_011_MI = 0.5000840418354720


def random_channel(rng, n):
    return Channel(rng.dirichlet(np.ones(n)), rng.dirichlet(np.ones(n)))


class TestBinaryEntropy:
    def test_endpoints(self):
        assert binary_entropy(0.0, "bits") == 0.0
        assert binary_entropy(1.0, "bits") == 0.0
        assert binary_entropy(0.5, "bits") == 1.0

    def test_reference_value(self):
        assert binary_entropy(0.11, "bits") == pytest.approx(HB_011_BITS, abs=1e-12)

    def test_units(self):
        assert binary_entropy(0.3, "nats") == pytest.approx(
            binary_entropy(0.3, "bits") * math.log(2), rel=1e-14
        )

    def test_domain_error(self):
        with pytest.raises(ValueError):
            binary_entropy(1.5)
        with pytest.raises(ValueError):
            binary_entropy(-0.1)
        with pytest.raises(ValueError):
            binary_entropy(0.5, "trits")

    @given(st.floats(0.0, 1.0))
    def test_symmetry_and_range(self, p):
        h = binary_entropy(p, "bits")
        assert 0.0 <= h <= 1.0
        assert h == pytest.approx(binary_entropy(1.0 - p, "bits"), abs=1e-12)


class TestBinaryBhattacharyya:
    def test_endpoints(self):
        assert binary_bhattacharyya(0.0) == 0.0
        assert binary_bhattacharyya(1.0) == 0.0
        assert binary_bhattacharyya(0.5) == 1.0

    def test_reference_value(self):
        assert binary_bhattacharyya(0.11) == pytest.approx(ZB_011, abs=1e-12)

    @given(st.floats(0.0, 1.0))
    def test_symmetry(self, p):
        # tolerance limited by the rounding of 1-p itself near the endpoints
        assert binary_bhattacharyya(p) == pytest.approx(
            binary_bhattacharyya(1.0 - p), abs=1e-9
        )

    def test_matches_two_output_channel(self):
        # Z of the 2-output symmetric channel equals the scalar function
        for p in np.arange(0.0, 1.0 + 1e-9, 1e-4):
            w = Channel([1.0 - p, p], [p, 1.0 - p])
            assert abs(bhattacharyya(w) - binary_bhattacharyya(p)) <= 1e-12


class TestValidate:
    def test_ok(self):
        assert validate(Channel([0.5, 0.5], [0.5, 0.5])) == []

    def test_boundary_probabilities_allowed(self):
        assert validate(Channel([1.0, 0.0], [0.0, 1.0])) == []

    def test_bad_sum_reported(self):
        msgs = validate(Channel([0.6, 0.5], [0.5, 0.5]))
        assert any("sum(p)" in m for m in msgs)

    def test_negative_entry(self):
        msgs = validate(Channel([1.2, -0.2], [0.5, 0.5]))
        assert any("p[0]" in m for m in msgs) and any("p[1]" in m for m in msgs)

    def test_length_mismatch(self):
        assert validate(Channel([1.0], [0.5, 0.5])) != []

    def test_non_finite(self):
        assert any("finite" in m for m in validate(Channel([np.nan, 1.0], [0.5, 0.5])))

    def test_make_channel_raises(self):
        with pytest.raises(ValueError):
            make_channel([0.6, 0.5], [0.5, 0.5])


class TestMixtureWeights:
    def test_normalized(self):
        rng = np.random.default_rng(7)
        for n in (2, 5, 11):
            w = random_channel(rng, n)
            for alpha in (0.0, 0.3, 1.0):
                r = mixture_weights(w, alpha)
                assert abs(r.sum() - 1.0) <= 1e-12

    def test_zero_weight_forces_zero_components(self):
        w = Channel([0.5, 0.5, 0.0], [0.5, 0.5, 0.0])
        r = mixture_weights(w, 0.4)
        assert r[2] == 0.0


class TestMutualInformation:
    def test_bsc_identity(self):
        assert mutual_information(bsc(0.11), 0.5) == pytest.approx(
            BSC_011_MI, abs=1e-12
        )

    def test_deterministic_input(self):
        rng = np.random.default_rng(1)
        w = random_channel(rng, 4)
        assert mutual_information(w, 0.0) == 0.0
        assert mutual_information(w, 1.0) == 0.0

    def test_useless_channel(self):
        w = Channel([0.3, 0.7], [0.3, 0.7])
        for alpha in np.linspace(0.0, 1.0, 11):
            assert abs(mutual_information(w, alpha)) <= 1e-12

    def test_symmetric_capacity_is_uniform_prior_value(self):
        w = bec(0.3)
        assert mutual_information(w, 0.5) == pytest.approx(0.7, abs=1e-12)

    @given(st.integers(0, 2**32 - 1), st.integers(2, 8), st.floats(0.0, 1.0))
    @settings(max_examples=200, deadline=None)
    def test_bounded_by_input_entropy_and_log_alphabet(self, seed, n, alpha):
        w = random_channel(np.random.default_rng(seed), n)
        mi = mutual_information(w, alpha)
        assert -1e-12 <= mi <= min(binary_entropy(alpha), math.log2(n)) + 1e-12

    def test_concave_in_alpha(self):
        rng = np.random.default_rng(3)
        alphas = np.arange(0.0, 1.0 + 1e-12, 1e-3)
        for n in (2, 3, 6):
            w = random_channel(rng, n)
            vals = np.array([mutual_information(w, a) for a in alphas])
            second = vals[2:] - 2 * vals[1:-1] + vals[:-2]
            assert second.max() <= 1e-9


class TestBhattacharyya:
    def test_bec(self):
        assert bhattacharyya(bec(0.3)) == pytest.approx(0.3, abs=1e-15)

    def test_perfect_channel(self):
        assert bhattacharyya(Channel([1.0, 0.0], [0.0, 1.0])) == 0.0

    def test_bsc(self):
        assert bhattacharyya(bsc(0.11)) == pytest.approx(ZB_011, abs=1e-12)

    def test_useless_iff_equal(self):
        w = Channel([0.2, 0.8], [0.2, 0.8])
        assert bhattacharyya(w) == pytest.approx(1.0, abs=1e-15)

    @given(st.integers(0, 2**32 - 1), st.integers(2, 10))
    @settings(max_examples=100, deadline=None)
    def test_output_permutation_invariance(self, seed, n):
        rng = np.random.default_rng(seed)
        w = random_channel(rng, n)
        perm = rng.permutation(n)
        wp = Channel(w.p[perm], w.q[perm])
        assert bhattacharyya(wp) == pytest.approx(bhattacharyya(w), abs=1e-12)

    def test_dead_symbols_contribute_nothing(self):
        w = Channel([0.7, 0.3, 0.0], [0.1, 0.9, 0.0])
        w2 = Channel([0.7, 0.3], [0.1, 0.9])
        assert bhattacharyya(w) == bhattacharyya(w2)
        assert mutual_information(w, 0.4) == pytest.approx(
            mutual_information(w2, 0.4), abs=1e-15
        )
