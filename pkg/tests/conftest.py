import numpy as np
import pytest

from sfj import check_reachability, networks
from sfj.graph import Edge, SignedDigraph


@pytest.fixture
def g1():
    return networks.g1()


@pytest.fixture
def g2():
    return networks.g2()


def random_reachable_graph(rng, n_max=10, n=None, density=None, m=None):
    """Random signed digraph with >= 1 stubborn agent, repaired so that every
    non-stubborn agent is reachable from some stubborn one."""
    if n is None:
        n = int(rng.integers(2, n_max + 1))
    p = rng.uniform(0.1, 0.35) if density is None else density
    edges = []
    for s in range(1, n + 1):
        for d in range(1, n + 1):
            if s != d and rng.random() < p:
                w = float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0]))
                edges.append(Edge(s, d, w))
    if m is None:
        m = int(rng.integers(1, n + 1))
    stub = rng.choice(np.arange(1, n + 1), size=m, replace=False)
    beta = np.zeros(n)
    beta[stub - 1] = rng.uniform(0.1, 1.0, size=m)
    g = SignedDigraph(n, tuple(edges), tuple(beta), tuple(rng.uniform(0, 10, n)))

    while True:
        report = check_reachability(g)
        if report.ok:
            return g
        present = {(e.src, e.dst) for e in g.edges}
        reached = sorted(set(range(1, g.n + 1)) - report.unreachable)
        extra = list(g.edges)
        for u in sorted(report.unreachable):
            src = int(rng.choice(reached))
            if (src, u) not in present:
                w = float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0]))
                extra.append(Edge(src, u, w))
                present.add((src, u))
        g = SignedDigraph(g.n, tuple(extra), g.beta, g.x0)


def brute_force_reachable(g):
    """All-pairs reachability by repeated squaring of the boolean adjacency;
    returns the set of non-stubborn agents no stubborn agent reaches."""
    n = g.n
    adj = np.zeros((n, n), dtype=bool)
    for src, dst, _ in g.edges:
        adj[src - 1, dst - 1] = True
    closure = adj.copy()
    for _ in range(n):
        closure = closure | (closure @ adj)
    unreachable = set()
    stub_rows = [s - 1 for s in g.stubborn]
    for q in range(1, n + 1):
        if g.beta[q - 1] > 0:
            continue
        if not any(closure[s, q - 1] for s in stub_rows):
            unreachable.add(q)
    return unreachable
