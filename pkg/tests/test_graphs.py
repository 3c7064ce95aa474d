"""Graph-coupled partition models: exact random-cluster laws, spin couplings,
the heat-bath partition sampler, torus walks, and the sample estimators."""

import math
from fractions import Fraction

import numpy as np
import pytest

from divcolor import (
    FiniteGraph,
    PartitionSample,
    cluster_density_estimator,
    coalescing_rw_rer,
    color_sample,
    coupling_check_fk_ising,
    coupling_check_fuzzy_potts,
    ergodicity_diagnostic,
    fk_exact_rer,
    fk_glauber_sampler,
    fuzzy_potts_exact_law,
    iid_edge_window_rer,
    ising_exact_law,
    pair_correlation_estimator,
    range_estimator,
    rwrs_rer,
)
from divcolor.graphs import EstimatorReport, torus_box, torus_site_index
from divcolor.measures import SizeLimitError, delta_rer, full_partition, singletons_partition
from divcolor.partitions import SetPartition

F = Fraction


# ---------------------------------------------------------------------------
# graphs


def test_graph_constructors_and_text_round_trip():
    g = FiniteGraph.from_text("1 2\n# a comment\n\n2 3\n")
    assert g.n == 3 and g.edges == ((1, 2), (2, 3))
    assert FiniteGraph.from_text(g.to_text()) == g
    assert FiniteGraph.path(4).edges == ((1, 2), (2, 3), (3, 4))
    assert FiniteGraph.cycle(3) == FiniteGraph.complete(3)
    assert len(FiniteGraph.complete(5).edges) == 10
    assert FiniteGraph.from_text("1 2", n=5).n == 5


def test_graph_validation():
    with pytest.raises(ValueError):
        FiniteGraph(2, ((1, 1),))
    with pytest.raises(ValueError):
        FiniteGraph(2, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        FiniteGraph(2, ((1, 3),))
    with pytest.raises(ValueError):
        FiniteGraph(0, ())


# ---------------------------------------------------------------------------
# exact random-cluster laws


def test_triangle_random_cluster_law():
    nu = fk_exact_rer(FiniteGraph.complete(3), F(1, 2), F(2))
    assert nu.prob((0, 1, 2)) == F(2, 7)
    assert nu.prob((0, 0, 0)) == F(2, 7)
    for rgs in ((0, 0, 1), (0, 1, 1), (0, 1, 0)):
        assert nu.prob(rgs) == F(1, 7)


def test_single_cluster_weight_reduces_to_independent_edges():
    alpha = F(1, 3)
    assert fk_exact_rer(FiniteGraph.path(4), alpha, F(1)) == iid_edge_window_rer(alpha, 4)


def test_random_cluster_degenerate_alphas():
    g = FiniteGraph.cycle(4)
    assert fk_exact_rer(g, F(1), F(3)) == delta_rer(full_partition(4))
    assert fk_exact_rer(g, F(0), F(3)) == delta_rer(singletons_partition(4))


def test_random_cluster_validation():
    g = FiniteGraph.path(3)
    with pytest.raises(ValueError):
        fk_exact_rer(g, F(3, 2), F(2))
    with pytest.raises(ValueError):
        fk_exact_rer(g, F(1, 2), F(0))
    with pytest.raises(SizeLimitError):
        fk_exact_rer(FiniteGraph.path(9), F(1, 2), F(2))
    with pytest.raises(SizeLimitError):
        fk_exact_rer(FiniteGraph.complete(7), F(1, 2), F(2))


# ---------------------------------------------------------------------------
# spin laws and couplings


def test_single_edge_spin_law():
    law = ising_exact_law(FiniteGraph.path(2), 0.8)
    z = 2 * math.exp(0.8) + 2 * math.exp(-0.8)
    assert law.prob("11") == pytest.approx(math.exp(0.8) / z, abs=1e-12)
    assert law.prob("00") == pytest.approx(math.exp(0.8) / z, abs=1e-12)
    assert law.prob("10") == pytest.approx(math.exp(-0.8) / z, abs=1e-12)


def test_two_state_site_model_is_spin_model_at_half_coupling():
    g = FiniteGraph.complete(3)
    fuzzy = fuzzy_potts_exact_law(g, 0.9, 2, 1)
    ising = ising_exact_law(g, 0.45)
    for cfg in ("000", "001", "011", "111", "101"):
        assert float(fuzzy.prob(cfg)) == pytest.approx(float(ising.prob(cfg)), abs=1e-12)


def test_site_model_validation():
    g = FiniteGraph.path(2)
    with pytest.raises(ValueError):
        fuzzy_potts_exact_law(g, 0.5, 3, 0)
    with pytest.raises(ValueError):
        fuzzy_potts_exact_law(g, 0.5, 3, 4)
    with pytest.raises(SizeLimitError):
        ising_exact_law(FiniteGraph.path(9), 0.5)


@pytest.mark.parametrize("J", [0.2, 0.5, 1.0])
def test_spin_coupling_convention(J):
    report = coupling_check_fk_ising(FiniteGraph.complete(3), J)
    assert report.matched == "1-e^{-2J}"
    assert report.deviation < 1e-10
    assert report.deviations["1-e^{-J}"] > report.deviation
    assert report.model == "ising" and report.q == 2


@pytest.mark.parametrize("ell", [1, 2])
def test_multistate_coupling_convention(ell):
    report = coupling_check_fuzzy_potts(FiniteGraph.complete(3), 0.7, 3, ell)
    assert report.matched == "1-e^{-J}"
    assert report.deviation < 1e-10
    assert report.model == "fuzzy-potts" and (report.q, report.ell) == (3, ell)


# ---------------------------------------------------------------------------
# heat-bath partition sampler


def test_heat_bath_yield_and_determinism():
    g = FiniteGraph.complete(3)
    run1 = list(fk_glauber_sampler(g, 0.5, 2.0, sweeps=20, seed=42, burnin=5))
    run2 = list(fk_glauber_sampler(g, 0.5, 2.0, sweeps=20, seed=42, burnin=5))
    run3 = list(fk_glauber_sampler(g, 0.5, 2.0, sweeps=20, seed=43, burnin=5))
    assert len(run1) == 15
    assert [s.partition for s in run1] == [s.partition for s in run2]
    assert [s.partition for s in run1] != [s.partition for s in run3]
    assert [s.time for s in run1] == list(range(6, 21))
    first = run1[0]
    assert first.model == "fk-glauber"
    assert first.params["q"] == 2.0 and first.params["edges"] == 3
    assert first.seed == 42


def test_heat_bath_single_edge_frequency():
    # one edge: every sweep resamples it independently with merge probability
    # alpha / (alpha + (1-alpha) q) = 1/3
    g = FiniteGraph.path(2)
    samples = list(fk_glauber_sampler(g, 0.5, 2.0, sweeps=3000, seed=9))
    freq = np.mean([s.partition.num_classes() == 1 for s in samples])
    assert freq == pytest.approx(1.0 / 3.0, abs=0.05)


def test_heat_bath_validation():
    g = FiniteGraph.path(2)
    with pytest.raises(ValueError):
        list(fk_glauber_sampler(g, 0.5, 0.5, sweeps=5, seed=1))
    with pytest.raises(ValueError):
        list(fk_glauber_sampler(g, 1.5, 2.0, sweeps=5, seed=1))
    with pytest.raises(ValueError):
        list(fk_glauber_sampler(g, 0.5, 2.0, sweeps=5, seed=1, burnin=5))


# ---------------------------------------------------------------------------
# torus geometry and coalescing walks


def test_torus_box_layout():
    assert torus_site_index((-1,), 5) == 4
    assert torus_site_index((1, 1), 3) == 4
    box = torus_box(1, 5, 1)
    assert box == [0, 4, 1]  # origin first
    assert len(torus_box(2, 7, 2)) == 25
    with pytest.raises(ValueError):
        torus_box(1, 5, 3)


def test_coalescing_walk_at_time_zero_is_singletons():
    sample = coalescing_rw_rer(1, 4, 0, seed=3)
    assert sample.partition == singletons_partition(4)
    assert sample.model == "coalescing-rw"
    assert sample.params == {"d": 1, "L": 4, "T": 0}
    assert "lower bounds" in sample.note


def test_coalescing_walk_determinism_and_merge():
    a = coalescing_rw_rer(1, 4, 5, seed=11)
    b = coalescing_rw_rer(1, 4, 5, seed=11)
    assert a.partition == b.partition
    # two walkers on a 2-site torus meet at the first jump: by time 50 the
    # seeded realization has surely coalesced
    tiny = coalescing_rw_rer(1, 2, 50, seed=5)
    assert tiny.partition.num_classes() == 1
    with pytest.raises(ValueError):
        coalescing_rw_rer(1, 4, -1, seed=1)
    with pytest.raises(SizeLimitError):
        coalescing_rw_rer(3, 200, 1, seed=1)


# ---------------------------------------------------------------------------
# walk-range partitions


def test_walk_partition_degenerate_step_laws():
    lazy = rwrs_rer({0: 1.0}, 6, seed=2)
    assert lazy.partition == full_partition(6)
    drift = rwrs_rer({1: 1.0}, 6, seed=2)
    assert drift.partition == singletons_partition(6)
    assert drift.params == {"n": 6, "steps": 1}


def test_walk_partition_determinism_and_validation():
    law = {1: 0.5, -1: 0.5}
    assert rwrs_rer(law, 50, seed=7).partition == rwrs_rer(law, 50, seed=7).partition
    with pytest.raises(ValueError):
        rwrs_rer({1: 0.5, (0, 1): 0.5}, 5, seed=1)  # mixed dimensions
    with pytest.raises(ValueError):
        rwrs_rer({1: 0.7}, 5, seed=1)  # mass missing
    with pytest.raises(ValueError):
        rwrs_rer({1: -0.5, -1: 1.5}, 5, seed=1)
    with pytest.raises(ValueError):
        rwrs_rer({1: 1.0}, 0, seed=1)


def test_walk_range_estimator_exact_cases():
    drift = range_estimator({1: 1.0}, 100, reps=3, seed=1)
    assert drift.estimates == {"range_fraction": 1.0}
    assert drift.stderr == {"range_fraction": 0.0}
    lazy = range_estimator({0: 1.0}, 100, reps=1, seed=1)
    assert lazy.estimates["range_fraction"] == pytest.approx(0.01)
    assert "single replicate" in lazy.note
    with pytest.raises(ValueError):
        range_estimator({1: 1.0}, 100, reps=0, seed=1)


# ---------------------------------------------------------------------------
# coloring samples


def test_color_sample_extremes_and_determinism():
    sample = rwrs_rer({1: 0.5, -1: 0.5}, 40, seed=3)
    assert not color_sample(sample, 0.0, seed=1).any()
    assert color_sample(sample, 1.0, seed=1).all()
    x = color_sample(sample, 0.5, seed=4)
    assert np.array_equal(x, color_sample(sample, 0.5, seed=4))
    assert x.dtype == np.uint8
    with pytest.raises(ValueError):
        color_sample(sample, 1.5, seed=1)


def test_color_sample_is_constant_on_classes():
    pi = SetPartition(6, (0, 1, 0, 2, 1, 0))
    x = color_sample(pi, 0.5, seed=9)
    for block in pi.blocks():
        vals = {int(x[v - 1]) for v in block}
        assert len(vals) == 1


# ---------------------------------------------------------------------------
# batch estimators


def test_pair_correlation_on_explicit_batch():
    batch = np.array([[1, 1], [1, 0], [0, 1], [0, 0]])
    rep = pair_correlation_estimator(batch, [(1, 2)], seed=5)
    assert rep.estimates == {"(1,2)": 0.25}
    assert rep.stderr["(1,2)"] == pytest.approx(math.sqrt(0.25 * 0.75 / 4))
    assert rep.n_samples == 4 and rep.seed == 5


def test_ergodicity_diagnostic_matches_iid_baseline():
    batch = np.array([[1, 1], [1, 0], [0, 1], [0, 0]])
    rep = ergodicity_diagnostic(batch, [1, 2], 0.5, seed=6)
    assert rep.estimates["box_average"] == pytest.approx(0.375)
    assert rep.estimates["iid_baseline"] == pytest.approx(0.375)
    assert rep.estimates["p_squared"] == pytest.approx(0.25)
    assert rep.note == ""


def test_ergodicity_diagnostic_flags_frozen_batch():
    batch = np.ones((10, 3))
    rep = ergodicity_diagnostic(batch, [1, 2, 3], 0.5, seed=6)
    assert rep.estimates["box_average"] == pytest.approx(1.0)
    assert "nonergodicity suspected" in rep.note
    single = ergodicity_diagnostic(np.ones((1, 3)), [1, 2], 0.5)
    assert "single sample" in single.note


def test_cluster_density_on_explicit_partitions():
    full = PartitionSample(full_partition(5), "coalescing-rw", {"d": 1, "L": 5, "T": 9})
    split = PartitionSample(singletons_partition(5), "coalescing-rw", {"d": 1, "L": 5, "T": 9})
    rep = cluster_density_estimator([full, split], ns=[1], seed=2)
    assert rep.estimates["origin_density(n=1)"] == pytest.approx((1.0 + 1 / 3) / 2)
    assert rep.estimates["count_density(n=1)"] == pytest.approx((1 / 3 + 1.0) / 2)
    assert rep.n_samples == 2
    only = cluster_density_estimator([full], ns=[1])
    assert "single sample" in only.note
    with pytest.raises(ValueError):
        cluster_density_estimator([], ns=[1])


def test_estimator_report_validation():
    with pytest.raises(ValueError):
        EstimatorReport("x", 0, 0, {}, {})
    with pytest.raises(ValueError):
        EstimatorReport("x", 1, 0, {"a": 1.0}, {"a": -0.1})
    with pytest.raises(ValueError):
        pair_correlation_estimator(np.ones(4), [(1, 2)])  # not a batch
