"""Spectral radius by power iteration, exact walk counts, and the chain that
squeezes path counts between them.

For any graph the doubled count of paths with 2l edges is at most the number
of 2l-step walks (each path is walked twice, and walks need not be simple),
and the walk total 1^T A^(2l) 1 is at most n * lambda^(2l) by the Rayleigh
quotient.  Walk counts are kept in exact integers so the comparison against
combinatorial counts never goes through floats; only lambda itself is a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, edge_count
from .patterns import count_paths

ITERATION_CAP = 100_000
DEFAULT_TOL = 1e-10


class SpectralError(RuntimeError):
    """Raised when power iteration fails to converge within the iteration cap."""


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Largest adjacency eigenvalue via power iteration from the all-ones vector.

    The iteration runs on A + I unconditionally: bipartite graphs have
    -lambda in their spectrum, which stalls plain power iteration, and the
    shift makes the dominant eigenvalue simple in magnitude.  Termination
    needs both a converged Rayleigh quotient and the residual check
    ||(A+I)x - mu x|| <= tol ||x||, which pins the absolute eigenvalue error
    below tol for symmetric matrices.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = g.n
    if n == 0 or edge_count(g) == 0:
        return 0.0
    a = np.zeros((n, n))
    for i in range(n):
        row = g.adj[i]
        while row:
            b = row & -row
            row ^= b
            a[i, b.bit_length() - 1] = 1.0
    shifted = a + np.eye(n)
    x = np.ones(n) / math.sqrt(n)
    mu_prev = None
    for _ in range(ITERATION_CAP):
        y = shifted @ x
        mu = float(x @ y)
        x = y / np.linalg.norm(y)
        if mu_prev is not None and abs(mu - mu_prev) < tol:
            residual = float(np.linalg.norm(shifted @ x - mu * x))
            if residual <= tol * float(np.linalg.norm(x)):
                return mu - 1.0
        mu_prev = mu
    raise SpectralError(f"power iteration did not converge within {ITERATION_CAP} steps")


def nikiforov_bound(n: int, k: int) -> float:
    """Spectral-radius bound sqrt(floor((k+1)/2) * n) for large graphs with no
    path of k edges."""
    if n < 1 or k < 2:
        raise ValueError("nikiforov_bound needs n >= 1 and k >= 2")
    return math.sqrt(((k + 1) // 2) * n)


def walk_count(g: Graph, m: int) -> int:
    """Number of m-step walks, 1^T A^m 1, by repeated exact integer matvecs."""
    if m < 0:
        raise ValueError("walk length must be >= 0")
    vec = [1] * g.n
    for _ in range(m):
        nxt = [0] * g.n
        for i in range(g.n):
            row = g.adj[i]
            s = 0
            while row:
                b = row & -row
                row ^= b
                s += vec[b.bit_length() - 1]
            nxt[i] = s
        vec = nxt
    return sum(vec)


@dataclass
class ChainReport:
    """Both links of the path-count / walk-count / eigenvalue chain."""

    n: int
    l: int
    path_copies: int
    walks: int
    radius: float
    walk_bound: float
    paths_le_walks: bool
    walks_le_bound: bool

    @property
    def ok(self) -> bool:
        return self.paths_le_walks and self.walks_le_bound


def nikiforov_threshold_scan(k: int, n_max: int = 40) -> dict:
    """Diagnostic: where the walk bound starts holding on the main construction.

    The bound sqrt(floor((k+1)/2) n) is only promised for large n, with no
    explicit threshold; this reports, for the given k, each n up to ``n_max``
    where the construction's spectral radius exceeds it, and the smallest n
    from which the bound holds through the end of the scan.  Never a test
    failure, by design.
    """
    from .constructions import build_gnka, core_clique_size

    t = core_clique_size(k)
    violations = []
    holds_from = None
    for n in range(max(k, t + 1), n_max + 1):
        radius = spectral_radius(build_gnka(n, k, t))
        if radius > nikiforov_bound(n, k) + 1e-9:
            violations.append(n)
            holds_from = None
        elif holds_from is None:
            holds_from = n
    return {"k": k, "violations": violations, "holds_from": holds_from}


def check_spectral_path_chain(g: Graph, l: int, slack: float = 1e-6) -> ChainReport:
    """Verify 2 * N(path_2l, G) <= #2l-walks <= n * lambda^(2l) * (1 + slack).

    The slack covers the numeric error of the eigenvalue; both combinatorial
    quantities are exact integers.  The chain holds for every graph, free or
    not.
    """
    if l < 1:
        raise ValueError("chain check needs l >= 1")
    paths = count_paths(2 * l, g)
    walks = walk_count(g, 2 * l)
    radius = spectral_radius(g) if edge_count(g) else 0.0
    bound = g.n * radius ** (2 * l) * (1.0 + slack)
    return ChainReport(
        n=g.n,
        l=l,
        path_copies=paths,
        walks=walks,
        radius=radius,
        walk_bound=bound,
        paths_le_walks=2 * paths <= walks,
        walks_le_bound=walks <= bound,
    )
