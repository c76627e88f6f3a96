"""Detection of locally persuasive agents from network topology alone.

An agent p is persuasive when some non-stubborn agent q can only hear from
the stubborn part of the network through p: every path from every stubborn
agent to q traverses p. If p itself is non-stubborn it must additionally not
be cut off by a single gatekeeper of its own. Both conditions reduce to
immediate-dominator queries on the digraph augmented with a virtual root that
points at every stubborn agent, which is how this module computes them.

Edge weights and signs play no role in detection; signs enter only through
the cooperativity condition C2 checked by check_conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Mapping, NamedTuple, Optional

from .errors import ConditionsNotMet, NoStubbornAgents, SizeLimit, UnreachableNodes
from .graph import SignedDigraph, check_reachability

VIRTUAL_ROOT = 0  # agents are 1..n, so 0 is free for the synthetic root


@dataclass(frozen=True)
class DominatorTree:
    """Immediate dominators over the stubborn-rooted search graph.

    idom maps each reachable agent to its immediate dominator (VIRTUAL_ROOT
    for agents no single other agent can cut off). subtree maps each agent to
    the set of agents it strictly dominates.
    """

    virtual_root: int
    idom: Mapping[int, int]
    subtree: Mapping[int, frozenset[int]]


class Violation(NamedTuple):
    node: int
    reason: str


@dataclass(frozen=True)
class LTPCertificate:
    """Detected persuasive agents, their persuaded sets, and condition flags.

    covered (C1): the persuasive clusters {p} | N_p cover every agent.
    cooperative (C2): every in-edge of every persuaded agent is positive.
    Both are None until check_conditions has run.
    """

    n: int
    stubborn: frozenset[int]
    ltp_agents: tuple[int, ...]
    persuaded: Mapping[int, frozenset[int]]
    covered: Optional[bool] = None
    cooperative: Optional[bool] = None
    violations: tuple[Violation, ...] = ()

    def covered_set(self) -> frozenset[int]:
        nodes = set(self.ltp_agents)
        for members in self.persuaded.values():
            nodes |= members
        return frozenset(nodes)

    def same_detection(self, other: "LTPCertificate") -> bool:
        """Equality of the topology-only part (agents and persuaded sets)."""
        return (
            self.ltp_agents == other.ltp_agents
            and dict(self.persuaded) == dict(other.persuaded)
        )


@dataclass(frozen=True)
class ClusterPrediction:
    """Predicted opinion clusters; flagged singletons fall outside the guarantee."""

    clusters: tuple[frozenset[int], ...]
    flagged_singletons: frozenset[int]


def build_dominator_tree(g: SignedDigraph) -> DominatorTree:
    """Dominators of the unsigned digraph rooted at a virtual super-source.

    The virtual root gets an edge to every stubborn agent, so a node p
    dominates q exactly when every path from every stubborn agent to q
    traverses p. Computed by the classic set-based fixed point over a
    reverse-postorder sweep; network sizes here never justify anything
    fancier.

    Raises UnreachableNodes if any non-stubborn agent has no path from a
    stubborn agent, and NoStubbornAgents when there is nothing to root at.
    """
    report = check_reachability(g)  # raises NoStubbornAgents on m = 0
    if not report.ok:
        raise UnreachableNodes(report.unreachable)

    preds: dict[int, set[int]] = {v: set() for v in range(g.n + 1)}
    succs: dict[int, set[int]] = {v: set() for v in range(g.n + 1)}
    for src, dst, _ in g.edges:
        preds[dst].add(src)
        succs[src].add(dst)
    for s in g.stubborn:
        preds[s].add(VIRTUAL_ROOT)
        succs[VIRTUAL_ROOT].add(s)

    # Reverse postorder of the reachable subgraph (iterative DFS).
    order: list[int] = []
    seen = {VIRTUAL_ROOT}
    stack = [(VIRTUAL_ROOT, iter(sorted(succs[VIRTUAL_ROOT])))]
    while stack:
        node, it = stack[-1]
        advanced = False
        for nxt in it:
            if nxt not in seen:
                seen.add(nxt)
                stack.append((nxt, iter(sorted(succs[nxt]))))
                advanced = True
                break
        if not advanced:
            order.append(node)
            stack.pop()
    rpo = list(reversed(order))

    # Stubborn agents are reachable by construction; purely stubborn graphs
    # reach everything, so `seen` covers all agents here.
    dom: dict[int, set[int]] = {VIRTUAL_ROOT: {VIRTUAL_ROOT}}
    for v in rpo[1:]:
        dom[v] = set(seen)
    changed = True
    while changed:
        changed = False
        for v in rpo[1:]:
            ps = [dom[p] for p in preds[v] if p in seen]
            new = {v} | set.intersection(*ps)
            if new != dom[v]:
                dom[v] = new
                changed = True

    idom: dict[int, int] = {}
    subtree: dict[int, frozenset[int]] = {}
    strict_subs: dict[int, set[int]] = {v: set() for v in seen}
    for v in seen - {VIRTUAL_ROOT}:
        strict = dom[v] - {v}
        # Strict dominators form a chain; the immediate one dominates the most.
        idom[v] = max(strict, key=lambda x: len(dom[x]))
        for x in strict - {VIRTUAL_ROOT}:
            strict_subs[x].add(v)
    for v in range(1, g.n + 1):
        subtree[v] = frozenset(strict_subs[v])

    return DominatorTree(virtual_root=VIRTUAL_ROOT, idom=idom, subtree=subtree)


def detect_ltp_agents(g: SignedDigraph, tree: DominatorTree) -> LTPCertificate:
    """Read the persuasive agents and their persuaded sets off the dominator tree.

    p qualifies iff no single agent dominates it (idom(p) is the virtual
    root; automatic for stubborn agents) and it strictly dominates at least
    one agent. Its persuaded set is exactly its dominator subtree.
    """
    stubborn = frozenset(g.stubborn)
    ltp = tuple(
        sorted(
            p
            for p in range(1, g.n + 1)
            if tree.idom[p] == tree.virtual_root and tree.subtree[p]
        )
    )
    persuaded = {p: tree.subtree[p] for p in ltp}
    _check_internal_consistency(g, stubborn, persuaded)
    return LTPCertificate(
        n=g.n, stubborn=stubborn, ltp_agents=ltp, persuaded=persuaded
    )


def _check_internal_consistency(g, stubborn, persuaded):
    # Persuaded sets are pairwise disjoint, non-stubborn only, and closed
    # under in-neighbours up to the persuader. Violations here would mean the
    # dominator computation is broken, never bad input.
    for a, b in combinations(persuaded, 2):
        assert not (persuaded[a] & persuaded[b]), f"persuaded sets of {a},{b} overlap"
    inn = g.in_neighbours()
    for p, members in persuaded.items():
        assert members, f"empty persuaded set recorded for {p}"
        assert not (members & stubborn), f"stubborn agent persuaded by {p}"
        for q in members:
            outside = set(inn[q]) - members - {p}
            assert not outside, f"in-neighbours {outside} of {q} escape cluster of {p}"


def brute_force_ltp_oracle(g: SignedDigraph, max_n: int = 12) -> LTPCertificate:
    """Literal restatement of the persuasive-agent conditions by path enumeration.

    Enumerates every simple path from every stubborn agent to every other
    agent and intersects the node sets. Exponential; refuses n > max_n.
    Exists purely as an independent check of detect_ltp_agents.
    """
    if g.n > max_n:
        raise SizeLimit(f"path enumeration limited to n <= {max_n}, got {g.n}")
    report = check_reachability(g)
    if not report.ok:
        raise UnreachableNodes(report.unreachable)

    out = g.out_neighbours()
    stubborn = frozenset(g.stubborn)

    # gate[q] = agents on every stubborn-to-q path (q excluded); None if no path.
    gate: dict[int, Optional[set[int]]] = {q: None for q in range(1, g.n + 1)}

    def walk(node, on_path):
        common = gate[node]
        if common is None:
            gate[node] = set(on_path) - {node}
        else:
            common &= on_path
        for nxt in out[node]:
            if nxt not in on_path:
                on_path.add(nxt)
                walk(nxt, on_path)
                on_path.remove(nxt)

    for s in stubborn:
        walk(s, {s})

    ltp = []
    persuaded = {}
    for p in range(1, g.n + 1):
        if p not in stubborn and gate[p]:
            continue  # a gatekeeper cuts p off: not persuasive
        if p not in stubborn and gate[p] is None:
            continue  # unreachable stubborn-free island (cannot happen here)
        members = frozenset(
            q
            for q in range(1, g.n + 1)
            if q not in stubborn and gate[q] is not None and p in gate[q]
        )
        if members:
            ltp.append(p)
            persuaded[p] = members
    return LTPCertificate(
        n=g.n,
        stubborn=stubborn,
        ltp_agents=tuple(sorted(ltp)),
        persuaded=persuaded,
    )


def check_conditions(g: SignedDigraph, cert: LTPCertificate) -> LTPCertificate:
    """Evaluate the two multiconsensus conditions on a detection certificate.

    C1 (covered): the clusters {p} | N_p exhaust the agent set.
    C2 (cooperative): every in-edge of every persuaded agent has positive
    weight. In-edges of the persuasive agents themselves are exempt; they may
    be antagonistic without voiding the guarantee.
    """
    violations = list(cert.violations)
    covered_set = cert.covered_set()
    for node in sorted(set(range(1, g.n + 1)) - covered_set):
        violations.append(Violation(node, "not covered by any persuasive cluster"))
    covered = len(covered_set) == g.n

    cooperative = True
    persuaded_all = frozenset().union(*cert.persuaded.values()) if cert.persuaded else frozenset()
    for src, dst, w in g.edges:
        if dst in persuaded_all and w < 0:
            cooperative = False
            violations.append(
                Violation(dst, f"negative in-edge from {src} at persuaded agent")
            )
    return replace(
        cert,
        covered=covered,
        cooperative=cooperative,
        violations=tuple(violations),
    )


def analyze(g: SignedDigraph) -> LTPCertificate:
    """Detect persuasive agents and evaluate C1/C2 in one call."""
    tree = build_dominator_tree(g)
    return check_conditions(g, detect_ltp_agents(g, tree))


def predict_clusters(cert: LTPCertificate, mode: str = "strict") -> ClusterPrediction:
    """Opinion clusters implied by the certificate.

    strict: requires C1 and C2, yields one cluster {p} | N_p per persuasive
    agent. relaxed: additionally gives every uncovered stubborn agent a
    singleton cluster, flagged because nothing ties its final opinion to
    anyone else's; uncovered non-stubborn agents stay unassigned. Both modes
    refuse to predict when C2 fails, since then even the per-cluster
    guarantee is void.
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"mode must be 'strict' or 'relaxed', got {mode!r}")
    if cert.covered is None or cert.cooperative is None:
        raise ValueError("certificate lacks condition flags; run check_conditions")
    if not cert.cooperative:
        raise ConditionsNotMet("cooperativity condition C2 fails")
    if mode == "strict" and not cert.covered:
        raise ConditionsNotMet("coverage condition C1 fails")

    clusters = [frozenset({p}) | cert.persuaded[p] for p in cert.ltp_agents]
    flagged = frozenset()
    if mode == "relaxed":
        flagged = cert.stubborn - cert.covered_set()
        clusters.extend(frozenset({s}) for s in sorted(flagged))
    return ClusterPrediction(clusters=tuple(clusters), flagged_singletons=flagged)


def certificate_to_dict(cert: LTPCertificate) -> dict:
    return {
        "ltp": list(cert.ltp_agents),
        "persuaded": {str(p): sorted(members) for p, members in cert.persuaded.items()},
        "C1": cert.covered,
        "C2": cert.cooperative,
        "violations": [
            {"node": v.node, "reason": v.reason} for v in cert.violations
        ],
    }
