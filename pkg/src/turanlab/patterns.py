"""Motif graphs (paths, cycles, stars, cliques, matching structures) and exact
counting of their copies in a host graph.

A "copy" of T in G is a not-necessarily-induced subgraph of G isomorphic to T,
counted once per unlabelled occurrence: the number of injective edge-preserving
vertex maps divided by |Aut(T)|.  The division is always exact because the
automorphism group acts freely on embeddings.

The generic counter backtracks over pattern vertices in a greedy connected
order that maximises back-degree, keeping candidate sets as bitmask
intersections.  Specialised counters (paths, cycles, cliques, stars) agree
with the generic one and are used where speed matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import Graph, degrees, edge_count, from_edges

MAX_PATTERN_VERTICES = 12
MAX_INDEPENDENCE_VERTICES = 40


class PatternError(ValueError):
    """Raised for invalid motif parameters or oversized inputs."""


@dataclass(frozen=True)
class Pattern:
    """A counted or forbidden motif: its graph plus the order of its automorphism group."""

    graph: Graph
    aut_order: int


def _pattern(g: Graph) -> Pattern:
    return Pattern(g, automorphism_order(g))


def make_path(length: int) -> Pattern:
    """Path with ``length`` edges on ``length + 1`` vertices."""
    if length < 0:
        raise PatternError("path length must be >= 0")
    if length + 1 > MAX_PATTERN_VERTICES:
        raise PatternError(f"path on {length + 1} vertices exceeds the pattern cap")
    g = from_edges(length + 1, [(i, i + 1) for i in range(length)])
    return Pattern(g, 1 if length == 0 else 2)


def make_cycle(length: int) -> Pattern:
    """Cycle with ``length`` edges; dihedral automorphism group of order 2*length."""
    if length < 3:
        raise PatternError("cycles need at least 3 edges")
    if length > MAX_PATTERN_VERTICES:
        raise PatternError(f"cycle on {length} vertices exceeds the pattern cap")
    g = from_edges(length, [(i, (i + 1) % length) for i in range(length)])
    return Pattern(g, 2 * length)


def make_star(leaves: int) -> Pattern:
    """Star with ``leaves`` leaves on ``leaves + 1`` vertices (centre is vertex 0)."""
    if leaves < 1:
        raise PatternError("stars need at least one leaf")
    if leaves + 1 > MAX_PATTERN_VERTICES:
        raise PatternError(f"star on {leaves + 1} vertices exceeds the pattern cap")
    g = from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    # leaf permutations, except the single edge which also swaps endpoints
    return Pattern(g, 2 if leaves == 1 else _factorial(leaves))


def make_clique(size: int) -> Pattern:
    if size < 1:
        raise PatternError("cliques need at least one vertex")
    if size > MAX_PATTERN_VERTICES:
        raise PatternError(f"clique on {size} vertices exceeds the pattern cap")
    g = from_edges(size, [(i, j) for i in range(size) for j in range(i + 1, size)])
    return Pattern(g, _factorial(size))


def make_matching_structure(variant: str, level: int) -> Pattern:
    """Matching-plus-dense-part motifs whose counts stay O(n^level) in path-free hosts.

    M1: (level-1)-matching plus a disjoint triangle.
    M2: (level-1)-matching plus a disjoint K_4.
    M3: (level-2)-matching plus two disjoint triangles.
    """
    variant = variant.upper()
    if variant == "M1":
        if level < 1:
            raise PatternError("M1 needs level >= 1")
        pairs, tail = level - 1, 3
    elif variant == "M2":
        if level < 1:
            raise PatternError("M2 needs level >= 1")
        pairs, tail = level - 1, 4
    elif variant == "M3":
        if level < 2:
            raise PatternError("M3 needs level >= 2")
        pairs, tail = level - 2, 6
    else:
        raise PatternError(f"unknown matching-structure variant {variant!r}")
    n = 2 * pairs + tail
    if n > MAX_PATTERN_VERTICES:
        raise PatternError(f"{variant}^{level} has {n} vertices, above the pattern cap")
    edges = [(2 * i, 2 * i + 1) for i in range(pairs)]
    base = 2 * pairs
    if variant == "M1":
        edges += [(base, base + 1), (base + 1, base + 2), (base, base + 2)]
    elif variant == "M2":
        edges += [
            (a, b)
            for a in range(base, base + 4)
            for b in range(a + 1, base + 4)
        ]
    else:
        for off in (base, base + 3):
            edges += [(off, off + 1), (off + 1, off + 2), (off, off + 2)]
    return _pattern(from_edges(n, edges))


def pattern_from_graph(g: Graph) -> Pattern:
    """Wrap an arbitrary small graph as a counted motif."""
    if g.n > MAX_PATTERN_VERTICES:
        raise PatternError(f"pattern on {g.n} vertices exceeds the {MAX_PATTERN_VERTICES} cap")
    return _pattern(g)


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def automorphism_order(g: Graph) -> int:
    """Number of adjacency-preserving permutations, by exhaustive backtracking.

    Candidates are pruned by degree, then checked edge-by-edge against the
    already-assigned prefix.  Exact for every motif used here (<= 12 vertices).
    """
    n = g.n
    if n > MAX_PATTERN_VERTICES:
        raise PatternError(f"automorphism search capped at {MAX_PATTERN_VERTICES} vertices")
    if n <= 1:
        return 1
    adj = g.adj
    deg = degrees(g)
    images = [0] * n
    count = 0

    def assign(i: int, used: int):
        nonlocal count
        if i == n:
            count += 1
            return
        row = adj[i]
        for w in range(n):
            bw = 1 << w
            if used & bw or deg[w] != deg[i]:
                continue
            wrow = adj[w]
            ok = True
            for j in range(i):
                if (row >> j & 1) != (wrow >> images[j] & 1):
                    ok = False
                    break
            if ok:
                images[i] = w
                assign(i + 1, used | bw)

    assign(0, 0)
    return count


def _embedding_order(p: Graph) -> list[int]:
    """Greedy connected ordering of pattern vertices maximising back-degree."""
    deg = degrees(p)
    order = []
    placed = 0
    for _ in range(p.n):
        best, best_key = -1, None
        for v in range(p.n):
            if placed >> v & 1:
                continue
            key = ((p.adj[v] & placed).bit_count(), deg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def count_embeddings(pattern_graph: Graph, g: Graph) -> int:
    """Number of injective maps of pattern vertices into ``g`` preserving pattern edges."""
    pn = pattern_graph.n
    if pn > MAX_PATTERN_VERTICES:
        raise PatternError(f"pattern on {pn} vertices exceeds the {MAX_PATTERN_VERTICES} cap")
    if pn == 0:
        return 1
    if pn > g.n:
        return 0
    order = _embedding_order(pattern_graph)
    back: list[list[int]] = []
    for idx, v in enumerate(order):
        back.append([j for j in range(idx) if pattern_graph.adj[v] >> order[j] & 1])
    gadj = g.adj
    full = (1 << g.n) - 1
    images = [0] * pn
    last = pn - 1
    total = 0

    def place(i: int, used: int):
        nonlocal total
        bs = back[i]
        if bs:
            cands = gadj[images[bs[0]]]
            for j in bs[1:]:
                cands &= gadj[images[j]]
            cands &= ~used
        else:
            cands = full & ~used
        if i == last:
            total += cands.bit_count()
            return
        while cands:
            b = cands & -cands
            cands ^= b
            images[i] = b.bit_length() - 1
            place(i + 1, used | b)

    place(0, 0)
    return total


def count_copies(pattern: Pattern, g: Graph) -> int:
    """Copies of the motif in ``g``: injective embeddings divided by |Aut|."""
    emb = count_embeddings(pattern.graph, g)
    if emb % pattern.aut_order:
        raise PatternError("embedding total not divisible by the automorphism order")
    return emb // pattern.aut_order


def contains_copy(pattern_graph: Graph, g: Graph) -> bool:
    """Early-exit test: does ``g`` contain at least one copy of the pattern?"""
    pn = pattern_graph.n
    if pn == 0:
        return True
    if pn > g.n:
        return False
    order = _embedding_order(pattern_graph)
    back: list[list[int]] = []
    for idx, v in enumerate(order):
        back.append([j for j in range(idx) if pattern_graph.adj[v] >> order[j] & 1])
    gadj = g.adj
    full = (1 << g.n) - 1
    images = [0] * pn

    def place(i: int, used: int) -> bool:
        if i == pn:
            return True
        bs = back[i]
        if bs:
            cands = gadj[images[bs[0]]]
            for j in bs[1:]:
                cands &= gadj[images[j]]
            cands &= ~used
        else:
            cands = full & ~used
        while cands:
            b = cands & -cands
            cands ^= b
            images[i] = b.bit_length() - 1
            if place(i + 1, used | b):
                return True
        return False

    return place(0, 0)


def count_paths(length: int, g: Graph) -> int:
    """Copies of the path with ``length`` edges, by depth-first enumeration of
    simple paths; ordered traversals are halved.  Length 0 counts vertices."""
    if length < 0:
        raise PatternError("path length must be >= 0")
    if length == 0:
        return g.n
    adj = g.adj
    last = length - 1
    total = 0

    def extend(head: int, used: int, d: int):
        nonlocal total
        cands = adj[head] & ~used
        if d == last:
            total += cands.bit_count()
            return
        while cands:
            b = cands & -cands
            cands ^= b
            extend(b.bit_length() - 1, used | b, d + 1)

    for s in range(g.n):
        extend(s, 1 << s, 0)
    return total // 2


def count_cycles(length: int, g: Graph) -> int:
    """Copies of the cycle with ``length`` edges; each cycle is anchored at its
    minimum vertex and traversed in both directions, hence the halving."""
    if length < 3:
        raise PatternError("cycles need at least 3 edges")
    adj = g.adj
    total = 0

    def extend(anchor: int, head: int, used: int, d: int):
        # d edges walked from the anchor; close with one more edge at d == length-1
        nonlocal total
        if d == length - 1:
            if adj[head] >> anchor & 1:
                total += 1
            return
        cands = adj[head] & ~used
        while cands:
            b = cands & -cands
            cands ^= b
            extend(anchor, b.bit_length() - 1, used | b, d + 1)

    for s in range(g.n):
        # only vertices above the anchor may appear inside the cycle
        low = (1 << (s + 1)) - 1
        extend(s, s, low, 0)
    return total // 2


def count_cliques(size: int, g: Graph) -> int:
    """Copies of the complete graph on ``size`` vertices, by neighbourhood recursion."""
    if size < 1:
        raise PatternError("clique size must be >= 1")
    if size == 1:
        return g.n
    adj = g.adj

    def rec(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        c = cand
        while c:
            b = c & -c
            c ^= b
            # c now holds only candidates above the chosen vertex
            sub = c & adj[b.bit_length() - 1]
            if sub.bit_count() >= depth - 1:
                total += rec(sub, depth - 1)
        return total

    return rec((1 << g.n) - 1, size)


def count_stars(leaves: int, g: Graph) -> int:
    """Copies of the star with ``leaves`` leaves via the degree-sum identity
    sum_v C(d(v), leaves).  The single edge (leaves = 1) is returned as e(G),
    since the degree sum would count each edge from both endpoints."""
    if leaves < 1:
        raise PatternError("stars need at least one leaf")
    if leaves == 1:
        return edge_count(g)
    return sum(comb(d, leaves) for d in degrees(g))


def independence_number(g: Graph) -> int:
    """Exact independence number by branch-and-bound on the complement-clique view.

    Branches on a maximum-degree vertex of the remaining candidate set; prunes
    with the trivial popcount bound.  Fine up to the documented 40-vertex cap.
    """
    if g.n > MAX_INDEPENDENCE_VERTICES:
        raise PatternError(
            f"independence number capped at {MAX_INDEPENDENCE_VERTICES} vertices"
        )
    adj = g.adj
    best = 0

    def branch(cand: int, size: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # peel vertices of degree <= 1 within cand greedily: always optimal
            pick = -1
            c = cand
            max_deg, max_v = -1, -1
            while c:
                b = c & -c
                c ^= b
                v = b.bit_length() - 1
                d = (adj[v] & cand).bit_count()
                if d <= 1:
                    pick = v
                    break
                if d > max_deg:
                    max_deg, max_v = d, v
            if pick >= 0:
                cand &= ~((1 << pick) | adj[pick])
                size += 1
                continue
            v = max_v
            bv = 1 << v
            branch(cand & ~bv & ~adj[v], size + 1)
            cand &= ~bv
        if size > best:
            best = size

    branch((1 << g.n) - 1, 0)
    return best


def path_length_if_path(g: Graph) -> int | None:
    """Edge count of ``g`` when it is a simple path, else None.  Used to route
    path-shaped forbidden motifs through the fast longest-path predicate."""
    n = g.n
    if n == 0:
        return None
    if n == 1:
        return 0
    degs = degrees(g)
    if edge_count(g) != n - 1 or degs.count(1) != 2 or degs.count(2) != n - 2:
        return None
    from .graphs import is_connected

    return n - 1 if is_connected(g) else None
