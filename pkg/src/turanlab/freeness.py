"""Exact longest-path and longest-cycle computation, and the freeness
predicates built on them.

"Free" follows the copy convention: a graph is free of a motif when it has no
not-necessarily-induced copy of it, and free of the long-cycle family C_{>=k}
when its circumference is below k.  Longest paths are found by depth-first
search over simple paths with two prunings: a reachability bound (the current
path cannot grow past the vertices still reachable from its head) and the
best-so-far cutoff.  Exact answers are only ever needed at construction
certification scale (n <= 20) and search scale (n <= 10), where this is fast;
beyond that the running time is exponential and the caller owns the policy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .patterns import Pattern, contains_copy, path_length_if_path


class ForbiddenError(ValueError):
    """Raised for malformed forbidden specifications."""


@dataclass(frozen=True)
class Forbidden:
    """A forbidden specification: one motif, or every cycle of length >= ``min_cycle``."""

    kind: str  # "pattern" | "long_cycles"
    pattern: Pattern | None = None
    min_cycle: int | None = None

    @classmethod
    def single(cls, pattern: Pattern) -> "Forbidden":
        return cls(kind="pattern", pattern=pattern)

    @classmethod
    def path(cls, k: int) -> "Forbidden":
        from .patterns import make_path

        if k < 1:
            raise ForbiddenError("forbidden path length must be >= 1")
        return cls(kind="pattern", pattern=make_path(k))

    @classmethod
    def long_cycles(cls, k: int) -> "Forbidden":
        if k < 3:
            raise ForbiddenError("long-cycle threshold must be >= 3")
        return cls(kind="long_cycles", min_cycle=k)

    def describe(self) -> str:
        if self.kind == "long_cycles":
            return f"cycles-ge:{self.min_cycle}"
        plen = path_length_if_path(self.pattern.graph)
        if plen is not None:
            return f"path:{plen}"
        from .graphs import to_graph6

        return f"g6:{to_graph6(self.pattern.graph)}"


def _reach(adj, seed: int, allowed: int) -> int:
    """Vertices reachable from ``seed`` inside ``allowed`` (both bitmasks)."""
    mask = seed & allowed
    while True:
        grown = mask
        bits = mask
        while bits:
            b = bits & -bits
            bits ^= b
            grown |= adj[b.bit_length() - 1] & allowed
        if grown == mask:
            return mask
        mask = grown


def longest_path_edges(g: Graph) -> int:
    """Maximum number of edges over all simple paths; 0 for edgeless graphs."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    full = (1 << n) - 1
    best = 0

    def extend(head: int, used: int, length: int):
        nonlocal best
        if length > best:
            best = length
        free = ~used & full
        # the path can pick up at most the vertices still reachable from its head
        cap = _reach(adj, 1 << head, free | (1 << head)).bit_count() - 1
        if length + cap <= best:
            return
        cands = adj[head] & free
        while cands:
            b = cands & -cands
            cands ^= b
            extend(b.bit_length() - 1, used | b, length + 1)

    for s in range(n):
        extend(s, 1 << s, 0)
    return best


def has_path_with_edges(g: Graph, k: int) -> bool:
    """Early-exit test for a simple path with at least ``k`` edges."""
    if k <= 0:
        return g.n > 0
    n = g.n
    adj = g.adj
    full = (1 << n) - 1

    def extend(head: int, used: int, length: int) -> bool:
        if length >= k:
            return True
        free = ~used & full
        cap = _reach(adj, 1 << head, free | (1 << head)).bit_count() - 1
        if length + cap < k:
            return False
        cands = adj[head] & free
        while cands:
            b = cands & -cands
            cands ^= b
            if extend(b.bit_length() - 1, used | b, length + 1):
                return True
        return False

    return any(extend(s, 1 << s, 0) for s in range(n))


def circumference(g: Graph) -> int:
    """Length of the longest cycle; 0 when the graph is a forest."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    best = 0

    def extend(anchor: int, abit: int, head: int, used: int, length: int):
        # simple path anchor..head of `length` edges over vertices > anchor
        nonlocal best
        if length >= 2 and adj[head] & abit and length + 1 > best:
            best = length + 1
        free = ~used & full
        reach = _reach(adj, 1 << head, free | (1 << head) | abit)
        if not reach & abit:
            return  # cannot close the cycle any more
        if length + reach.bit_count() - 1 <= best:
            return
        cands = adj[head] & free
        while cands:
            b = cands & -cands
            cands ^= b
            extend(anchor, abit, b.bit_length() - 1, used | b, length + 1)

    for s in range(n):
        # cycles are anchored at their minimum vertex
        low = (1 << (s + 1)) - 1
        extend(s, 1 << s, s, low, 0)
    return best


def has_cycle_with_at_least(g: Graph, k: int) -> bool:
    """Early-exit test for a cycle of length at least ``k`` (k >= 3)."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1

    def extend(anchor: int, abit: int, head: int, used: int, length: int) -> bool:
        if length + 1 >= k and length >= 2 and adj[head] & abit:
            return True
        free = ~used & full
        reach = _reach(adj, 1 << head, free | (1 << head) | abit)
        if not reach & abit:
            return False
        if length + reach.bit_count() - 1 + 1 < k:
            return False
        cands = adj[head] & free
        while cands:
            b = cands & -cands
            cands ^= b
            if extend(anchor, abit, b.bit_length() - 1, used | b, length + 1):
                return True
        return False

    return any(extend(s, 1 << s, s, (1 << (s + 1)) - 1, 0) for s in range(n))


def is_free(g: Graph, forbidden: Forbidden) -> bool:
    """True iff ``g`` contains no forbidden copy.

    Path-shaped motifs are decided through the longest-path search (identical
    verdict to the generic copy count, much faster); arbitrary motifs fall back
    to an early-exit embedding search; long-cycle families use circumference.
    """
    if forbidden.kind == "long_cycles":
        return not has_cycle_with_at_least(g, forbidden.min_cycle)
    plen = path_length_if_path(forbidden.pattern.graph)
    if plen is not None:
        return not has_path_with_edges(g, plen)
    return not contains_copy(forbidden.pattern.graph, g)
