"""Small simple graphs on at most 64 vertices, stored as bitmask adjacency rows.

Every vertex set fits in one machine word, so neighbourhood intersection,
the workhorse of all counting routines, is a single `&`.  Graphs are
immutable after construction and safe to share between workers.  Vertices
are the integers 0..n-1; there are no labels, weights or directions.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (bad edges, bad graph6, size caps)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: ``adj[i]`` is the neighbour set of ``i`` as a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} has neighbour bits >= n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j & 1) != (self.adj[j] >> i & 1):
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")


def from_edges(n: int, edges) -> Graph:
    """Build the simple graph on ``n`` vertices with the given edges (duplicates collapse)."""
    if n > MAX_VERTICES:
        raise GraphError(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u},{u}) not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def edges_of(g: Graph) -> list[tuple[int, int]]:
    """All edges (u, v) with u < v, in column-major (graph6 bit) order."""
    return [(u, v) for v in range(g.n) for u in range(v) if g.adj[v] >> u & 1]


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def degrees(g: Graph) -> list[int]:
    return [row.bit_count() for row in g.adj]


def min_degree(g: Graph) -> int:
    """Minimum degree; 0 for the empty graph by convention."""
    if g.n == 0:
        return 0
    return min(row.bit_count() for row in g.adj)


def component_mask(g: Graph, seed_mask: int) -> int:
    """Vertex set (bitmask) reachable from any vertex in ``seed_mask``."""
    mask = seed_mask
    while True:
        grown = mask
        bits = mask
        while bits:
            b = bits & -bits
            bits ^= b
            grown |= g.adj[b.bit_length() - 1]
        if grown == mask:
            return mask
        mask = grown


def is_connected(g: Graph) -> bool:
    """True when the graph has one component; vacuously true on 0 vertices."""
    if g.n == 0:
        return True
    return component_mask(g, 1) == (1 << g.n) - 1


def components(g: Graph) -> list[int]:
    """Vertex sets of the connected components as bitmasks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = component_mask(g, 1 << v)
        out.append(comp)
        seen |= comp
    return out


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on ``vertices`` (iterable or bitmask), relabelled 0..|S|-1 ascending."""
    if isinstance(vertices, int):
        sel = [v for v in range(g.n) if vertices >> v & 1]
    else:
        sel = sorted(set(vertices))
    for v in sel:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(sel)}
    rows = [0] * len(sel)
    for v in sel:
        row = g.adj[v]
        for w in sel:
            if row >> w & 1:
                rows[index[v]] |= 1 << index[w]
    return Graph(len(sel), tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Relabel vertices: edge (perm[i], perm[j]) iff edge (i, j) in ``g``."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a bijection on 0..n-1")
    rows = [0] * g.n
    for i in range(g.n):
        row = g.adj[i]
        target = 0
        while row:
            b = row & -row
            row ^= b
            target |= 1 << perm[b.bit_length() - 1]
        rows[perm[i]] = target
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(~g.adj[v] & full & ~(1 << v) for v in range(g.n)))


# ---------------------------------------------------------------------------
# graph6 codec.  Byte values are printable ASCII offset by 63; the body packs
# the upper triangle of the adjacency matrix column by column, bit order
# (0,1),(0,2),(1,2),(0,3),..., six bits per byte, zero-padded at the end.
# ---------------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (short size header below 63 vertices, long form above)."""
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    else:
        header = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    bits = []
    for v in range(n):
        col = g.adj[v]
        for u in range(v):
            bits.append(col >> u & 1)
    body = []
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        body.append(chr(val + 63))
    return header + "".join(body)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (n <= 64); inverse of :func:`to_graph6`."""
    s = text.strip()
    if not s:
        raise GraphError("empty graph6 record")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    pos = 0
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise GraphError("graph6 records beyond 258047 vertices are not supported")
        if len(s) < 4:
            raise GraphError("truncated long-form graph6 size header")
        n = 0
        for ch in s[1:4]:
            v = ord(ch) - 63
            if not 0 <= v < 64:
                raise GraphError(f"bad graph6 header byte {ch!r}")
            n = n << 6 | v
        pos = 4
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise GraphError(f"bad graph6 size byte {s[0]!r}")
        pos = 1
    if n > MAX_VERTICES:
        raise GraphError(f"graph6 record has {n} vertices, above the {MAX_VERTICES} cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}"
        )
    bits = []
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise GraphError(f"bad graph6 body byte {ch!r}")
        bits.extend((v >> s6) & 1 for s6 in range(5, -1, -1))
    rows = [0] * n
    idx = 0
    for v in range(n):
        for u in range(v):
            if bits[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))
