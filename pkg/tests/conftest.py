"""Shared helpers: seeded random graphs and slow independent oracles.

The oracles deliberately take the dumbest correct route (full permutation or
subset enumeration) so they share no code path with the implementations they
check.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from turanlab.graphs import Graph, from_edges


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def seeded_graphs(seed: int, count: int, n_max: int, p_lo: float = 0.2, p_hi: float = 0.8):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, n_max)
        p = rng.uniform(p_lo, p_hi)
        out.append(random_graph(rng, n, p))
    return out


def naive_embeddings(pattern: Graph, host: Graph) -> int:
    """Injective edge-preserving maps, by trying every vertex tuple."""
    count = 0
    pedges = [
        (i, j) for i in range(pattern.n) for j in range(i + 1, pattern.n)
        if pattern.adj[i] >> j & 1
    ]
    for image in permutations(range(host.n), pattern.n):
        if all(host.adj[image[i]] >> image[j] & 1 for i, j in pedges):
            count += 1
    return count


def naive_copies(pattern: Graph, aut: int, host: Graph) -> int:
    total = naive_embeddings(pattern, host)
    assert total % aut == 0
    return total // aut


def naive_longest_path(g: Graph) -> int:
    best = 0
    for size in range(2, g.n + 1):
        found = False
        for seq in permutations(range(g.n), size):
            if all(g.adj[seq[i]] >> seq[i + 1] & 1 for i in range(size - 1)):
                found = True
                break
        if found:
            best = size - 1
        else:
            break
    return best


def naive_circumference(g: Graph) -> int:
    best = 0
    for size in range(3, g.n + 1):
        for seq in permutations(range(g.n), size):
            if seq[0] != min(seq):
                continue
            if all(g.adj[seq[i]] >> seq[i + 1] & 1 for i in range(size - 1)) and (
                g.adj[seq[-1]] >> seq[0] & 1
            ):
                best = size
                break
    return best


def naive_independence(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for sub in combinations(range(g.n), size):
            if all(not g.adj[u] >> v & 1 for u, v in combinations(sub, 2)):
                return size
    return best
