"""Stochastic generators: sampler law, counts, determinism, s2 phases."""

import numpy as np
import pytest

import lnskit as lk
from lnskit.stochastic import PowerLawSampler, SaturationError, _sample_partner


def rng_of(seed):
    return np.random.default_rng(np.random.SeedSequence(seed))


class TestPowerLawSampler:
    def test_alpha_zero_uniform_over_targets(self):
        # L=100, first=0: 97 admissible nodes; distances 2..49 carry two
        # nodes, distance 50 one
        sampler = PowerLawSampler(100, 0.0)
        probs = sampler.probabilities()
        assert probs[2] == pytest.approx(2 / 97)
        assert probs[50] == pytest.approx(1 / 97)
        assert sum(probs.values()) == pytest.approx(1.0)

    def test_large_alpha_degenerates_to_distance_two(self):
        sampler = PowerLawSampler(100, 50.0)
        rng = rng_of(0)
        net = lk.new_ring(100)
        draws = {lk.sample_shortcut_end(0, sampler, net, rng) for _ in range(200)}
        assert draws <= {2, 98}

    def test_l6_alpha1_exact_ratio(self):
        # admissible targets of node 0: {2, 4} at distance 2, {3} at distance 3
        # weights 2 * (1/2) vs 1 * (1/3) -> 3:1
        sampler = PowerLawSampler(6, 1.0)
        probs = sampler.probabilities()
        assert probs[2] / probs[3] == pytest.approx(3.0)
        rng = rng_of(1)
        counts = {2: 0, 3: 0, 4: 0}
        for _ in range(30_000):
            counts[sampler.sample_target(0, rng)] += 1
        near = counts[2] + counts[4]
        assert near / counts[3] == pytest.approx(3.0, rel=0.1)

    def test_sides_balanced(self):
        sampler = PowerLawSampler(101, 1.0)
        rng = rng_of(2)
        plus = sum(1 <= sampler.sample_target(0, rng) <= 50 for _ in range(4000))
        assert 1700 < plus < 2300

    def test_too_small_ring(self):
        with pytest.raises(lk.ParameterError):
            PowerLawSampler(3, 0.0)

    def test_saturation_error(self):
        # L=5: node 0 admits only targets {2, 3}; occupy both
        sampler = PowerLawSampler(5, 0.0)
        pairs = {(0, 2), (0, 3)}
        with pytest.raises(SaturationError):
            _sample_partner(0, sampler, pairs, rng_of(3))

    def test_sample_shortcut_end_respects_existing(self):
        sampler = PowerLawSampler(6, 0.0)
        net = lk.Network(6, ((0, 2), (0, 4)))
        rng = rng_of(4)
        for _ in range(50):
            assert lk.sample_shortcut_end(0, sampler, net, rng) == 3


class TestS1:
    def test_every_node_attaches_at_p1(self):
        net = lk.construct_s1(100, 1.0, 0.0, seed=5)
        assert net.shortcut_count == 100

    def test_vanishing_p_yields_no_shortcuts(self):
        for seed in range(10):
            assert lk.construct_s1(200, 1e-12, 0.0, seed).shortcut_count == 0

    def test_binomial_moments(self):
        # 1000 seeds, L=1000, p=0.1: mean count within 3 sigma of 100
        L, p, n = 1000, 0.1, 1000
        counts = [lk.construct_s1(L, p, 0.0, seed=s).shortcut_count for s in range(n)]
        sigma = np.sqrt(L * p * (1 - p))
        assert abs(np.mean(counts) - L * p) < 3 * sigma

    def test_p_out_of_range(self):
        for p in (0.0, -0.5, 1.5):
            with pytest.raises(lk.ParameterError):
                lk.construct_s1(100, p, 0.0, seed=0)


class TestS1m:
    def test_exact_count(self):
        for t in (1, 17, 100):
            assert lk.construct_s1m(100, t, 0.5, seed=9).shortcut_count == t

    def test_large_instance_count(self):
        assert lk.construct_s1m(10_000, 1000, 0.0, seed=1).shortcut_count == 1000

    def test_t_equals_L_first_ends_cover_all_nodes(self):
        net = lk.construct_s1m(60, 60, 0.0, seed=3)
        assert net.shortcut_count == 60

    def test_t_out_of_range(self):
        with pytest.raises(lk.ParameterError):
            lk.construct_s1m(100, 101, 0.0, seed=0)
        with pytest.raises(lk.ParameterError):
            lk.construct_s1m(100, 0, 0.0, seed=0)


class TestS2:
    def test_c_zero_identical_to_s1m(self):
        for seed in range(5):
            assert lk.construct_s2(200, 40, 0, 0.7, seed) == lk.construct_s1m(
                200, 40, 0.7, seed
            )

    def test_conjoined_end_touches_existing_endpoint(self):
        # t=2, c=1: the conjoined shortcut must share a node with the first
        for seed in range(20):
            net = lk.construct_s2(50, 2, 1, 0.0, seed)
            (a, b), (c, d) = net.shortcuts
            assert {a, b} & {c, d}

    def test_counts(self):
        net = lk.construct_s2(300, 30, 15, 1.0, seed=11)
        assert net.shortcut_count == 30

    def test_c_out_of_range(self):
        with pytest.raises(lk.ParameterError):
            lk.construct_s2(100, 10, 10, 0.0, seed=0)
        with pytest.raises(lk.ParameterError):
            lk.construct_s2(100, 10, -1, 0.0, seed=0)


class TestDeterminism:
    @pytest.mark.parametrize(
        "build",
        [
            lambda s: lk.construct_s1(80, 0.3, 0.5, s),
            lambda s: lk.construct_s1m(80, 20, 1.0, s),
            lambda s: lk.construct_s2(80, 20, 10, 1.0, s),
        ],
    )
    def test_same_seed_same_network(self, build):
        assert build(1234) == build(1234)

    def test_different_seeds_differ(self):
        assert lk.construct_s1m(200, 50, 0.0, 1) != lk.construct_s1m(200, 50, 0.0, 2)


class TestStochasticSpec:
    def test_build_matches_direct_call(self):
        spec = lk.StochasticSpec("s1m", L=100, alpha=0.5, t=10)
        assert spec.build(seed=7) == lk.construct_s1m(100, 10, 0.5, 7)

    def test_family_parameter_mismatch(self):
        with pytest.raises(lk.ParameterError):
            lk.StochasticSpec("s1", L=100, alpha=0.5, t=10)
        with pytest.raises(lk.ParameterError):
            lk.StochasticSpec("s1m", L=100, alpha=0.5)

    def test_needs_seed(self):
        with pytest.raises(lk.ParameterError):
            lk.StochasticSpec("s1m", L=100, alpha=0.5, t=10).build()


class TestBoundedLengthsAtHighAlpha:
    def test_mean_shortcut_length_stable_in_L(self):
        # alpha=3 has a finite mean length, so it must not scale with L
        def mean_len(L, n):
            vals = []
            for seed in range(n):
                net = lk.construct_s1m(L, 30, 3.0, seed)
                vals.append(
                    np.mean([lk.lattice_distance(L, i, j) for i, j in net.shortcuts])
                )
            return np.mean(vals)

        small, large = mean_len(1000, 30), mean_len(10_000, 30)
        assert abs(large - small) / small < 0.2
