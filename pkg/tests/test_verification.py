import numpy as np
import pytest

from sfj import (
    ConditionsNotMet,
    NotConverged,
    analyze,
    cluster_report,
    cluster_spread,
    clusters_from_influence,
    clusters_from_trace,
    influence_matrix,
    predict_clusters,
    refines,
    robustness_harness,
    simulate,
)
from sfj.dynamics import OpinionTrace
from sfj.graph import Edge, SignedDigraph


class TestInfluenceClusters:
    def test_identity_gives_singletons(self):
        clusters = clusters_from_influence(np.eye(4))
        assert clusters == tuple(frozenset({i}) for i in (1, 2, 3, 4))

    def test_identical_rows_share_a_cluster(self):
        v = np.array([[0.2, 0.8], [0.2, 0.8]])
        assert clusters_from_influence(v) == (frozenset({1, 2}),)

    def test_g2_has_exactly_four(self, g2):
        clusters = clusters_from_influence(influence_matrix(g2))
        assert set(clusters) == {
            frozenset({1, 2, 3}),
            frozenset({4, 5, 6}),
            frozenset({7, 8, 9}),
            frozenset({10, 11, 12}),
        }

    def test_borderline_rows_chain_through_union_find(self):
        # closeness is not transitive: 1~2 and 2~3 but not 1~3 directly
        v = np.array([[0.0, 1.0], [0.9e-8, 1.0], [1.8e-8, 1.0]])
        clusters = clusters_from_influence(v, tau=1e-8)
        assert clusters == (frozenset({1, 2, 3}),)
        assert cluster_spread(v, clusters) == pytest.approx(1.8e-8)


class TestTraceClusters:
    def test_fully_stubborn_clusters_are_level_sets_of_x0(self):
        g = SignedDigraph(
            4, (), (1.0, 1.0, 1.0, 1.0), (2.0, 5.0, 2.0, 7.0)
        )
        clusters = clusters_from_trace(simulate(g))
        assert set(clusters) == {
            frozenset({1, 3}),
            frozenset({2}),
            frozenset({4}),
        }

    def test_constant_start_on_cooperative_graph_reaches_consensus(self):
        g = SignedDigraph(
            3,
            (Edge(1, 2, 1.0), Edge(2, 3, 2.0)),
            (0.7, 0.0, 0.0),
            (4.0, 4.0, 4.0),
        )
        assert clusters_from_trace(simulate(g)) == (frozenset({1, 2, 3}),)

    def test_trace_clusters_refine_into_influence_clusters(self, g2):
        rng = np.random.default_rng(67)
        v_clusters = clusters_from_influence(influence_matrix(g2))
        for _ in range(10):
            shuffled = SignedDigraph(
                g2.n, g2.edges, g2.beta, tuple(rng.uniform(0, 10, g2.n))
            )
            t_clusters = clusters_from_trace(simulate(shuffled))
            assert refines(v_clusters, t_clusters)

    def test_unconverged_trace_rejected(self):
        trace = OpinionTrace(
            states=np.zeros((3, 2)), converged=False, iterations=2, residual=1.0
        )
        with pytest.raises(NotConverged):
            clusters_from_trace(trace)


class TestRefines:
    def test_refinement_direction(self):
        fine = [frozenset({1}), frozenset({2}), frozenset({3})]
        coarse = [frozenset({1, 2}), frozenset({3})]
        assert refines(fine, coarse)
        assert not refines(coarse, fine)


class TestClusterReport:
    def test_g2_report_matches(self, g2):
        predicted = predict_clusters(analyze(g2)).clusters
        report = cluster_report(predicted, influence_matrix(g2))
        assert report.match is True
        assert report.max_within_cluster_spread <= 1e-10
        assert set(report.observed) == set(predicted)

    def test_observed_partitions_all_agents(self, g2):
        report = cluster_report((), influence_matrix(g2))
        seen = sorted(v for c in report.observed for v in c)
        assert seen == list(range(1, g2.n + 1))


class TestRobustnessHarness:
    def test_g2_passes_every_trial(self, g2):
        report = robustness_harness(g2, trials=50, seed=5)
        assert report.passes == report.trials == 50
        assert report.worst_spread <= 1e-8
        assert set(report.predicted) == {
            frozenset({1, 2, 3}),
            frozenset({4, 5, 6}),
            frozenset({7, 8, 9}),
            frozenset({10, 11, 12}),
        }

    def test_prediction_is_independent_of_the_draw(self, g2):
        a = robustness_harness(g2, trials=5, seed=1)
        b = robustness_harness(g2, trials=5, seed=99)
        assert a.predicted == b.predicted

    def test_broken_cooperativity_refused(self, g1):
        flipped = g1.reweighted(
            [-w if (s, d) == (2, 3) else w for s, d, w in g1.edges]
        )
        with pytest.raises(ConditionsNotMet):
            robustness_harness(flipped, trials=5, seed=0)

    def test_uncovered_graph_refused(self, g1):
        with pytest.raises(ConditionsNotMet):
            robustness_harness(g1, trials=5, seed=0)

    def test_condition_violations_are_observed_not_asserted(self, g1):
        # Violating C2 voids the guarantee but must not be treated as a
        # disproof: clustering may or may not survive, so the only contract
        # is that analysis still runs and reports.
        flipped = g1.reweighted(
            [-w if (s, d) == (2, 3) else w for s, d, w in g1.edges]
        )
        cert = analyze(flipped)
        assert cert.cooperative is False
        clusters = clusters_from_influence(influence_matrix(flipped))
        assert sum(len(c) for c in clusters) == flipped.n


class TestWeightStubbornnessInvariance:
    def test_clusters_survive_any_reweighting(self, g2):
        rng = np.random.default_rng(71)
        g2_like = g2
        predicted = set(predict_clusters(analyze(g2_like)).clusters)
        for _ in range(25):
            weights = [
                float(np.sign(w) * rng.uniform(0.1, 10.0))
                for _, _, w in g2_like.edges
            ]
            beta = np.zeros(g2_like.n)
            for s in g2_like.stubborn:
                beta[s - 1] = 1.0 - rng.uniform(0.0, 1.0)
            redrawn = g2_like.reweighted(weights, beta=beta)
            observed = set(clusters_from_influence(influence_matrix(redrawn)))
            assert observed == predicted
