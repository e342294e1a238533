import numpy as np
import pytest

from bichan import (
    AlphabetCapError,
    Channel,
    bec,
    bhattacharyya,
    bsc,
    capacity_golden,
    conservation_residual,
    merge_equivalent_outputs,
    mutual_information,
    polarize,
    transform_minus,
    transform_plus,
    validate,
    z_channel,
)


def random_channel(rng, n):
    return Channel(rng.dirichlet(np.ones(n)), rng.dirichlet(np.ones(n)))


class TestSingleStepTransforms:
    def test_bec_minus_z(self):
        w = transform_minus(bec(0.5))
        assert validate(w) == []
        assert bhattacharyya(w) == pytest.approx(0.75, abs=1e-12)

    def test_bec_plus_z(self):
        w = transform_plus(bec(0.5))
        assert validate(w) == []
        assert bhattacharyya(w) == pytest.approx(0.25, abs=1e-12)

    def test_perfect_channel_fixed_point(self):
        w = Channel([1.0, 0.0], [0.0, 1.0])
        assert bhattacharyya(transform_minus(w)) == 0.0
        assert bhattacharyya(transform_plus(w)) == 0.0

    def test_useless_channel_fixed_point(self):
        w = Channel([0.3, 0.7], [0.3, 0.7])
        assert bhattacharyya(transform_minus(w)) == pytest.approx(1.0, abs=1e-12)
        assert bhattacharyya(transform_plus(w)) == pytest.approx(1.0, abs=1e-12)

    def test_alphabet_cap(self):
        w = random_channel(np.random.default_rng(0), 40)
        with pytest.raises(AlphabetCapError):
            transform_minus(w, cap=1000)
        with pytest.raises(AlphabetCapError):
            transform_plus(w, cap=3000)

    def test_erasure_z_recursion_exact(self):
        for eps in np.arange(0.05, 1.0, 0.05):
            w = bec(eps)
            z = bhattacharyya(w)
            assert abs(bhattacharyya(transform_minus(w)) - (2 * z - z * z)) <= 1e-12
            assert abs(bhattacharyya(transform_plus(w)) - z * z) <= 1e-12

    def test_general_z_inequalities(self):
        rng = np.random.default_rng(13)
        for n in (2, 3, 4):
            for _ in range(30):
                w = random_channel(rng, n)
                z = bhattacharyya(w)
                assert bhattacharyya(transform_plus(w)) <= z * z + 1e-12
                assert bhattacharyya(transform_minus(w)) <= 2 * z - z * z + 1e-12

    def test_sym_capacity_conservation_single_step(self):
        rng = np.random.default_rng(29)
        for _ in range(20):
            w = random_channel(rng, 3)
            total = mutual_information(transform_minus(w), 0.5) + mutual_information(
                transform_plus(w), 0.5
            )
            assert total == pytest.approx(2 * mutual_information(w, 0.5), abs=1e-10)


class TestMergeEquivalentOutputs:
    def test_bec_minus_collapses_to_three_symbols(self):
        w = transform_minus(bec(0.5))
        assert w.n_outputs == 9
        merged = merge_equivalent_outputs(w)
        assert merged.n_outputs == 3
        assert bhattacharyya(merged) == pytest.approx(0.75, abs=1e-13)

    def test_distinct_ratios_unchanged(self):
        w = Channel([0.5, 0.3, 0.2], [0.1, 0.2, 0.7])
        merged = merge_equivalent_outputs(w)
        assert merged.n_outputs == 3
        assert sorted(merged.p) == sorted(w.p)

    def test_dead_symbols_removed(self):
        w = Channel([0.7, 0.3, 0.0], [0.1, 0.9, 0.0])
        assert merge_equivalent_outputs(w).n_outputs == 2

    def test_preserves_z_and_mi(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            base = random_channel(rng, 3)
            w = transform_minus(base)  # creates mergeable structure sometimes
            merged = merge_equivalent_outputs(w)
            assert merged.n_outputs <= w.n_outputs
            assert abs(bhattacharyya(merged) - bhattacharyya(w)) <= 1e-12
            for alpha in np.arange(0.1, 1.0, 0.1):
                assert abs(
                    mutual_information(merged, alpha) - mutual_information(w, alpha)
                ) <= 1e-12

    def test_zero_ratio_classes_merge(self):
        w = Channel([0.4, 0.3, 0.3, 0.0], [0.0, 0.0, 0.0, 1.0])
        merged = merge_equivalent_outputs(w)
        assert merged.n_outputs == 2
        assert bhattacharyya(merged) == 0.0


class TestPolarize:
    def test_depth_zero_is_base_analysis(self):
        w = bsc(0.11)
        nodes = polarize(w, 0)
        assert len(nodes) == 1
        assert nodes[0].path == ""
        assert nodes[0].z == pytest.approx(bhattacharyya(w), abs=1e-15)
        assert nodes[0].sym_capacity == pytest.approx(
            mutual_information(w, 0.5), abs=1e-15
        )

    def test_bec_half_depth_two_z_multiset(self):
        nodes = polarize(bec(0.5), 2)
        zs = sorted(n.z for n in nodes)
        assert zs == pytest.approx([0.0625, 0.4375, 0.5625, 0.9375], abs=1e-12)
        assert [n.path for n in nodes] == ["--", "-+", "+-", "++"]

    def test_conservation_asymmetric_base(self):
        w = z_channel(0.5)
        nodes = polarize(w, 3)
        assert len(nodes) == 8
        assert conservation_residual(w, nodes) <= 1e-8

    def test_conservation_random_bases(self):
        rng = np.random.default_rng(37)
        for _ in range(10):
            w = random_channel(rng, 2)
            for depth in (1, 2, 3, 4):
                assert conservation_residual(w, polarize(w, depth)) <= 1e-8

    def test_bound_sandwich_at_every_node(self):
        rng = np.random.default_rng(41)
        for _ in range(5):
            w = random_channel(rng, 2)
            for node in polarize(w, 2):
                c = capacity_golden(node.channel).capacity
                assert node.bounds.gen_lower - 1e-7 <= node.sym_capacity
                assert node.sym_capacity <= c + 1e-7
                assert c <= node.bounds.gen_upper + 1e-7

    def test_depth_refused_beyond_cap(self):
        w = z_channel(0.3)
        with pytest.raises(AlphabetCapError):
            polarize(w, 6, cap=500)

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            polarize(bsc(0.1), -1)
