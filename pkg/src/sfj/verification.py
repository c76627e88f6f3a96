"""Cluster extraction and the randomized-reweighting robustness harness.

Two routes to observed clusters: grouping rows of the influence matrix
(initial-condition independent, the authoritative one) and grouping final
opinions of a single converged run (which can merge clusters whenever two
of them happen to land on the same value). The harness re-draws edge-weight
magnitudes and stubbornness levels and checks that the influence-matrix
clusters never move, which is exactly what the topology-only detection
promises when C1 and C2 hold.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import OpinionTrace, influence_matrix
from .errors import ConditionsNotMet, NotConverged
from .graph import SignedDigraph
from .ltp import analyze, predict_clusters

DEFAULT_TAU = 1e-8
WEIGHT_RANGE = (0.1, 10.0)  # re-draw window; keeps edges away from zero


@dataclass(frozen=True)
class ClusterReport:
    """Predicted vs. observed partition, with the worst within-cluster spread."""

    predicted: tuple[frozenset[int], ...]
    observed: tuple[frozenset[int], ...]
    match: bool
    max_within_cluster_spread: float
    tolerance: float


@dataclass(frozen=True)
class RobustnessReport:
    trials: int
    passes: int
    worst_spread: float
    predicted: tuple[frozenset[int], ...]
    tau: float
    seed: int

    @property
    def all_passed(self) -> bool:
        return self.passes == self.trials


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, u):
        while self.parent[u] != u:
            self.parent[u] = self.parent[self.parent[u]]
            u = self.parent[u]
        return u

    def union(self, u, v):
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[rv] = ru


def _group_rows(rows: np.ndarray, thresh: float) -> tuple[frozenset[int], ...]:
    """Transitive closure of pairwise max-norm closeness; 1-based ids."""
    count = rows.shape[0]
    uf = _UnionFind(count)
    for i in range(count):
        for j in range(i + 1, count):
            if np.max(np.abs(rows[i] - rows[j])) <= thresh:
                uf.union(i, j)
    groups: dict[int, set[int]] = {}
    for i in range(count):
        groups.setdefault(uf.find(i), set()).add(i + 1)
    return tuple(
        frozenset(members) for members in sorted(groups.values(), key=min)
    )


def clusters_from_influence(V, tau: float = DEFAULT_TAU) -> tuple[frozenset[int], ...]:
    """Group agents whose influence-matrix rows agree entrywise within tau.

    tau is relative to the largest entry magnitude of V. Closeness is not
    transitive, so borderline rows can chain into one group; cluster_spread
    exposes the resulting diameters.
    """
    V = np.asarray(V, dtype=float)
    scale = float(np.max(np.abs(V)))
    return _group_rows(V, tau * scale if scale > 0 else tau)


def clusters_from_trace(
    trace: OpinionTrace, tau: float = DEFAULT_TAU
) -> tuple[frozenset[int], ...]:
    """Group agents by final opinion. Initial-condition dependent; two
    predicted clusters can coincidentally merge here, never split."""
    if not trace.converged:
        raise NotConverged(trace, "cannot cluster an unconverged trace")
    final = trace.final
    scale = float(np.max(np.abs(final)))
    return _group_rows(final[:, None], tau * scale if scale > 0 else tau)


def cluster_spread(V, clusters) -> float:
    """Largest max-norm diameter of V's rows over the given clusters."""
    V = np.asarray(V, dtype=float)
    worst = 0.0
    for cluster in clusters:
        idx = sorted(v - 1 for v in cluster)
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                worst = max(worst, float(np.max(np.abs(V[idx[a]] - V[idx[b]]))))
    return worst


def refines(finer, coarser) -> bool:
    """True when every set of `finer` is contained in some set of `coarser`."""
    return all(any(f <= c for c in coarser) for f in finer)


def cluster_report(predicted, V, tau: float = DEFAULT_TAU) -> ClusterReport:
    observed = clusters_from_influence(V, tau)
    return ClusterReport(
        predicted=tuple(frozenset(c) for c in predicted),
        observed=observed,
        match=refines(predicted, observed),
        max_within_cluster_spread=cluster_spread(V, predicted),
        tolerance=tau,
    )


def robustness_harness(
    g: SignedDigraph,
    trials: int = 200,
    seed: int = 0,
    tau: float = DEFAULT_TAU,
) -> RobustnessReport:
    """Re-draw weights and stubbornness; the predicted partition must survive.

    Each trial keeps the topology and every edge sign, draws fresh weight
    magnitudes uniformly from WEIGHT_RANGE and fresh stubbornness levels in
    (0, 1] for the stubborn agents, recomputes the influence matrix, and
    compares its clusters with the prediction. Requires C1 and C2 up front;
    on inputs violating them nothing is asserted either way, because the
    conditions are sufficient, not necessary.
    """
    cert = analyze(g)
    if not (cert.covered and cert.cooperative):
        raise ConditionsNotMet(
            f"harness needs C1 and C2; got C1={cert.covered} C2={cert.cooperative}"
        )
    predicted = predict_clusters(cert, mode="strict").clusters

    rng = np.random.default_rng(seed)
    lo, hi = WEIGHT_RANGE
    signs = np.sign([w for _, _, w in g.edges])
    stubborn_rows = [i - 1 for i in g.stubborn]

    passes = 0
    worst = 0.0
    predicted_key = set(predicted)
    for _ in range(trials):
        weights = signs * rng.uniform(lo, hi, size=len(g.edges))
        beta = np.zeros(g.n)
        beta[stubborn_rows] = 1.0 - rng.uniform(0.0, 1.0, size=len(stubborn_rows))
        trial_graph = g.reweighted(weights, beta=beta)
        V = influence_matrix(trial_graph)
        observed = clusters_from_influence(V, tau)
        spread = cluster_spread(V, predicted)
        worst = max(worst, spread)
        if set(observed) == predicted_key:
            passes += 1
    return RobustnessReport(
        trials=trials,
        passes=passes,
        worst_spread=worst,
        predicted=predicted,
        tau=tau,
        seed=seed,
    )


def robustness_report_to_dict(report: RobustnessReport) -> dict:
    return {
        "trials": report.trials,
        "passes": report.passes,
        "worst_spread": report.worst_spread,
        "predicted": [sorted(c) for c in report.predicted],
    }
