"""Opinion dynamics: iteration, steady state, and block reduction.

The update is x(k+1) = (I - B) W x(k) + B x(0) with B = diag(beta). Under
stubborn-reachability the update matrix has spectral radius below one, the
iteration contracts, and the final opinions are x* = V x(0) with
V = (I - (I - B) W)^{-1} B. Everything here works in 0-based matrix indices;
agent i sits at row i-1.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import (
    HypothesisViolated,
    NotConverged,
    PowerIterationStalled,
    SingularBlock,
    SingularSystem,
    UnreachableNodes,
)
from .graph import SignedDigraph, check_reachability, normalize

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1_000_000

_EIG_CUTOFF = 64  # below this, dense eigenvalues beat power iteration
_POWER_SEED = 20240817  # fixed so spectral_radius is reproducible


@dataclass(frozen=True, eq=False)
class OpinionTrace:
    """Recorded opinion iterates; states[k] is x(k), states[0] the initial state."""

    states: np.ndarray
    converged: bool
    iterations: int
    residual: float

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]


@dataclass(frozen=True, eq=False)
class SteadyStateSystem:
    """Homogeneous steady-state form R y = 0 of the converged dynamics.

    R stacks [I - (I-B)W | -B_s] over m zero rows, where B_s holds the
    stubborn columns of B; y stacks the final opinions over the stubborn
    agents' initial opinions. Rows of agents whose in-edges are all positive
    sum to zero; a negative in-edge makes the row sum strictly positive.
    """

    R: np.ndarray
    y: np.ndarray
    stubborn_index: tuple[int, ...]
    graph: SignedDigraph
    W: np.ndarray

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class ReducedRowRelation:
    """What is left of a persuaded agent's balance row after block elimination.

    When every in-edge of the persuaded set is positive, the row keeps
    exactly two nonzero entries, at the persuader's and the persuaded
    agent's columns, and they cancel, which pins the two final opinions
    together.
    """

    persuader: int
    persuaded: int
    persuader_entry: float
    persuaded_entry: float
    max_off_support: float
    solve_mismatch: float

    def holds(self, tol: float = 1e-10) -> bool:
        return (
            self.max_off_support <= tol
            and abs(self.persuader_entry + self.persuaded_entry) <= tol
            and abs(self.persuaded_entry) > tol
        )


def sfj_step(W, beta, x, x0) -> np.ndarray:
    """One opinion update: (I - diag(beta)) W x + diag(beta) x0."""
    W = np.asarray(W, dtype=float)
    beta = np.asarray(beta, dtype=float)
    x = np.asarray(x, dtype=float)
    x0 = np.asarray(x0, dtype=float)
    n = W.shape[0]
    if W.shape != (n, n) or beta.shape != (n,) or x.shape != (n,) or x0.shape != (n,):
        raise ValueError(
            f"dimension mismatch: W {W.shape}, beta {beta.shape}, "
            f"x {x.shape}, x0 {x0.shape}"
        )
    if np.any(beta < 0) or np.any(beta > 1):
        raise ValueError("beta entries must lie in [0, 1]")
    return (1.0 - beta) * (W @ x) + beta * x0


def _contraction_certificate(update_abs: np.ndarray) -> Optional[float]:
    """Bound ||(I - M)^{-1}||_inf by the row sums of (I - abs(M))^{-1}.

    The bound converts a step difference into a guaranteed distance from the
    fixed point. Returns None when abs(M) is not contracting (the solve
    fails), in which case callers fall back to the plain step criterion.
    """
    n = update_abs.shape[0]
    try:
        z = np.linalg.solve(np.eye(n) - update_abs, np.ones(n))
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(z)) or np.any(z < 0):
        return None
    return float(z.max())


def simulate(
    g: SignedDigraph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> OpinionTrace:
    """Iterate the opinion update until the limit is pinned down to tol.

    The stop rule scales the step difference by a certified contraction
    bound, so on convergence the last iterate is within tol of the true
    fixed point, not merely tol away from its predecessor. Raises
    NotConverged (carrying the partial trace) when max_iter is exhausted.
    """
    sysm = normalize(g)
    update = sysm.update_matrix()
    kappa = _contraction_certificate(np.abs(update))
    step_tol = tol if kappa is None else tol / kappa

    x0 = np.array(g.x0)
    x = x0.copy()
    states = [x0.copy()]
    residual = np.inf
    for k in range(1, max_iter + 1):
        x_next = update @ x + sysm.beta * x0
        residual = float(np.max(np.abs(x_next - x)))
        states.append(x_next)
        x = x_next
        if residual < step_tol:
            return OpinionTrace(
                states=np.array(states), converged=True, iterations=k,
                residual=residual,
            )
    trace = OpinionTrace(
        states=np.array(states), converged=False, iterations=max_iter,
        residual=residual,
    )
    raise NotConverged(trace, f"no convergence after {max_iter} iterations")


def spectral_radius(M, tol: float = 1e-10, max_iter: int = 20_000) -> float:
    """Largest eigenvalue magnitude of a square matrix.

    Small matrices go straight to the dense eigensolver. Larger ones run a
    deterministically seeded power iteration; if that stalls (rotating
    dominant pair), the error reports the entrywise-absolute-value bound,
    which always dominates the true radius.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if n <= _EIG_CUTOFF:
        return float(np.max(np.abs(np.linalg.eigvals(M))))

    rng = np.random.default_rng(_POWER_SEED)
    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    estimate = 0.0
    stable = 0
    for _ in range(max_iter):
        w = M @ v
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0  # nilpotent direction collapsed; radius is 0
        new_estimate = norm
        v = w / norm
        if abs(new_estimate - estimate) <= tol * max(1.0, new_estimate):
            stable += 1
            if stable >= 3:
                return float(new_estimate)
        else:
            stable = 0
        estimate = new_estimate
    bound = float(np.max(np.abs(np.linalg.eigvals(np.abs(M)))))
    raise PowerIterationStalled(
        f"power iteration did not settle in {max_iter} steps; "
        f"absolute-value bound gives radius <= {bound:.6g}"
    )


def influence_matrix(g: SignedDigraph) -> np.ndarray:
    """Map from initial to final opinions: V = (I - (I-B)W)^{-1} B.

    Computed by one LU-factorized multi-right-hand-side solve, never an
    explicit inverse. Columns of non-stubborn agents are zero: only stubborn
    agents' initial opinions leave a trace in the limit.
    """
    sysm = normalize(g)
    update = sysm.update_matrix()
    rho = spectral_radius(update)
    if rho >= 1.0:
        raise SingularSystem(
            f"update matrix has spectral radius {rho:.6g} >= 1; "
            "check stubborn-reachability"
        )
    n = g.n
    return np.linalg.solve(np.eye(n) - update, np.diag(sysm.beta))


def neumann_influence(g: SignedDigraph, terms: int) -> np.ndarray:
    """Truncated series sum_{k=0}^{terms} ((I-B)W)^k B.

    Independent slow route to the influence matrix, kept solely as a test
    oracle for the direct solve. terms = 0 returns B itself.
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    sysm = normalize(g)
    update = sysm.update_matrix()
    acc = np.diag(sysm.beta)
    term = acc.copy()
    for _ in range(terms):
        term = update @ term
        acc += term
    return acc


def neumann_tail_bound(g: SignedDigraph, terms: int) -> np.ndarray:
    """Entrywise certificate for the series remainder after `terms` terms.

    Every power of the update matrix is dominated entrywise by the same
    power of its absolute value, so the dropped tail is at most
    abs(M)^{terms+1} (I - abs(M))^{-1} B entry by entry.
    """
    sysm = normalize(g)
    update_abs = np.abs(sysm.update_matrix())
    n = g.n
    try:
        tail_gain = np.linalg.solve(np.eye(n) - update_abs, np.diag(sysm.beta))
    except np.linalg.LinAlgError as exc:
        raise SingularSystem(
            "absolute update matrix is not contracting; no tail bound exists"
        ) from exc
    return np.linalg.matrix_power(update_abs, terms + 1) @ tail_gain


def neumann_terms_for(g: SignedDigraph, target: float) -> int:
    """Smallest certified truncation depth within target of the exact solve.

    Starts from the geometric estimate rho_abs^{K+1} / (1 - rho_abs) and
    then walks the exact entrywise tail certificate forward until it clears
    the target; the estimate alone can undershoot when the update matrix has
    a non-normal transient.
    """
    sysm = normalize(g)
    update_abs = np.abs(sysm.update_matrix())
    rho_abs = spectral_radius(update_abs)
    if rho_abs >= 1.0:
        raise SingularSystem(
            f"absolute update matrix has spectral radius {rho_abs:.6g} >= 1"
        )
    scale = float(np.max(sysm.beta))
    if rho_abs == 0.0 or scale == 0.0:
        return 1
    k = max(
        1, int(np.ceil(np.log(target * (1.0 - rho_abs) / scale) / np.log(rho_abs)))
    )
    n = g.n
    tail_gain = np.linalg.solve(np.eye(n) - update_abs, np.diag(sysm.beta))
    power = np.linalg.matrix_power(update_abs, k + 1)
    while np.max(power @ tail_gain) > target:
        power = update_abs @ power
        k += 1
    return k


def build_steady_state(g: SignedDigraph) -> SteadyStateSystem:
    """Assemble the homogeneous system R y = 0 satisfied by the final opinions.

    The first n rows balance each agent's final opinion against its
    neighbours and, for stubborn agents, their initial opinion; the last m
    rows are zero and stand for the fixed initial opinions themselves.
    Raises NoStubbornAgents / UnreachableNodes when the steady state is not
    well defined in the first place.
    """
    report = check_reachability(g)
    if not report.ok:
        raise UnreachableNodes(report.unreachable)
    sysm = normalize(g)
    n = g.n
    stubborn = g.stubborn
    m = len(stubborn)
    R = np.zeros((n + m, n + m))
    R[:n, :n] = np.eye(n) - sysm.update_matrix()
    for k, agent in enumerate(stubborn):
        R[agent - 1, n + k] = -sysm.beta[agent - 1]
    xstar = influence_matrix(g) @ np.array(g.x0)
    y = np.concatenate([xstar, np.array(g.x0)[[a - 1 for a in stubborn]]])
    return SteadyStateSystem(
        R=R, y=y, stubborn_index=stubborn, graph=g, W=sysm.W
    )


def schur_complement(M, keep) -> np.ndarray:
    """Eliminate the complement of `keep` from M: M[k] - M[k,e] M[e]^{-1} M[e,k].

    keep holds the 0-based indices to retain. Raises SingularBlock when the
    eliminated block is not invertible.
    """
    M = np.asarray(M, dtype=float)
    size = M.shape[0]
    keep = np.asarray(sorted(keep), dtype=int)
    elim = np.setdiff1d(np.arange(size), keep)
    if elim.size == 0:
        return M[np.ix_(keep, keep)].copy()
    A = M[np.ix_(keep, keep)]
    B = M[np.ix_(keep, elim)]
    C = M[np.ix_(elim, keep)]
    D = M[np.ix_(elim, elim)]
    try:
        return A - B @ np.linalg.solve(D, C)
    except np.linalg.LinAlgError as exc:
        raise SingularBlock(f"eliminated block is singular: {exc}") from exc


def reduce_steady_state(
    sysm: SteadyStateSystem, p: int, q: int, persuaded: Iterable[int]
):
    """Eliminate the rest of p's persuaded set and inspect q's remaining row.

    With alpha-complement = persuaded \\ {q}, the eliminated block is
    I - W restricted to those agents; it is invertible whenever the
    restricted weights contract, which stubborn-reachability guarantees.
    Returns (reduced matrix, ReducedRowRelation). The relation also records
    how far the eliminated coordinates, reconstructed from the kept ones,
    drift from the full solution.

    Raises HypothesisViolated if any persuaded agent has a negative in-edge
    and SingularBlock if the eliminated block fails the contraction test.
    """
    members = frozenset(persuaded)
    if q not in members:
        raise ValueError(f"agent {q} is not in the persuaded set {sorted(members)}")
    if p in members:
        raise ValueError(f"persuader {p} cannot be in its own persuaded set")
    g = sysm.graph
    bad = [
        (src, dst) for src, dst, w in g.edges if dst in members and w < 0
    ]
    if bad:
        raise HypothesisViolated(bad)

    elim = sorted(v - 1 for v in members - {q})
    if elim:
        rho = spectral_radius(sysm.W[np.ix_(elim, elim)])
        if rho >= 1.0:
            raise SingularBlock(
                f"restricted weight block has spectral radius {rho:.6g} >= 1"
            )
    elim_set = set(elim)
    keep = [i for i in range(sysm.R.shape[0]) if i not in elim_set]
    reduced = schur_complement(sysm.R, keep)

    pos = {orig: new for new, orig in enumerate(keep)}
    row = reduced[pos[q - 1]]
    off = np.delete(row, [pos[p - 1], pos[q - 1]])
    max_off = float(np.max(np.abs(off))) if off.size else 0.0

    # Reconstruct the eliminated coordinates from the kept ones and compare
    # against the direct steady state.
    if elim:
        y_keep = sysm.y[keep]
        D = sysm.R[np.ix_(elim, elim)]
        C = sysm.R[np.ix_(elim, keep)]
        y_elim = -np.linalg.solve(D, C @ y_keep)
        solve_mismatch = float(np.max(np.abs(y_elim - sysm.y[elim])))
    else:
        solve_mismatch = 0.0

    relation = ReducedRowRelation(
        persuader=p,
        persuaded=q,
        persuader_entry=float(row[pos[p - 1]]),
        persuaded_entry=float(row[pos[q - 1]]),
        max_off_support=max_off,
        solve_mismatch=solve_mismatch,
    )
    return reduced, relation


def write_trace_csv(trace: OpinionTrace, fh) -> None:
    """Write a trace as rows k, x_1, ..., x_n."""
    n = trace.states.shape[1]
    writer = csv.writer(fh)
    writer.writerow(["k"] + [f"x_{i}" for i in range(1, n + 1)])
    for k, row in enumerate(trace.states):
        writer.writerow([k] + [repr(float(v)) for v in row])


def write_matrix_csv(M, fh) -> None:
    """Write a dense matrix as bare CSV rows."""
    writer = csv.writer(fh)
    for row in np.asarray(M):
        writer.writerow([repr(float(v)) for v in row])
