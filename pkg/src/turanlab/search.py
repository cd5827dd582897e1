"""Brute-force extremal oracle: exact ex(n, T, H) at desk scale, a streaming
mode for externally generated graph6 corpora, and the verification suites.

The exhaustive search walks a prefix tree over the C(n,2) edge slots in fixed
column-major order.  The include branch of an edge is taken only when adding
it creates no forbidden copy, which needs a check local to that edge; exclude
branches always recurse, so the leaves are exactly the forbidden-free labelled
graphs.  Copy counts of a fixed motif only grow under edge addition, so the
maximum is attained on edge-maximal free graphs; a leaf is counted only when
every voluntarily excluded edge would now create a forbidden copy.  That keeps
the counting work proportional to the (few) maximal graphs instead of the
(many) free graphs.

Witnesses are deduplicated by a brute-force canonical form: the minimum edge
bit-vector over all vertex permutations, rendered as graph6.  At most
``WITNESS_CAP`` extremal graphs are retained per record, in deterministic
first-found order.

The search space can be partitioned by fixing the first few edge decisions;
partitions are independent and the merged record does not depend on the
partitioning, so worker count never changes output.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .constructions import (
    build_gnka,
    build_hnk,
    c4_exact,
    construction_leading_coeff,
    core_clique_size,
    diff_c4,
    diff_p3,
    diff_p4,
    diff_star,
    eg_bound,
    eg_cycle_bound,
    gnka_count,
    leading_coeff,
    luo_clique_bound,
    luo_cycle_clique_bound,
    p5p6_leading,
    star_exact,
)
from .freeness import Forbidden, is_free
from .graphs import (
    Graph,
    components,
    degrees,
    edge_count,
    induced_subgraph,
    is_connected,
    parse_graph6,
    relabel,
    to_graph6,
)
from .patterns import (
    Pattern,
    count_cliques,
    count_copies,
    count_cycles,
    count_paths,
    count_stars,
    make_clique,
    make_cycle,
    make_matching_structure,
    make_path,
    make_star,
    path_length_if_path,
    pattern_from_graph,
)

EXHAUSTIVE_CAP = 7
EXHAUSTIVE_HARD_CAP = 8  # opt-in; roughly 2^28 edge subsets before pruning
TARGET_VERTEX_CAP = 6
WITNESS_CAP = 32


class SearchError(ValueError):
    """Raised for cap violations and malformed stream input."""


@dataclass
class ExtremalRecord:
    """Result of one extremal computation over a population of graphs."""

    n: int
    target: Pattern
    forbidden: Forbidden
    connected_only: bool
    max_count: int | None
    witnesses: list[str]
    graphs_scanned: int
    mode: str  # "exhaustive" | "stream"


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def canonical_graph6(g: Graph) -> str:
    """graph6 string minimised over all vertex permutations (exact, n <= 8 scale)."""
    n = g.n
    if n <= 1:
        return to_graph6(g)
    adj = g.adj
    best_val = None
    best_perm = None
    for p in permutations(range(n)):
        val = 0
        for v in range(n):
            row = adj[p[v]]
            for u in range(v):
                val = val << 1 | (row >> p[u] & 1)
        if best_val is None or val < best_val:
            best_val, best_perm = val, p
    inv = [0] * n
    for i, x in enumerate(best_perm):
        inv[x] = i
    return to_graph6(relabel(g, inv))


def _canon_sorted(adjs: list[tuple[int, ...]], n: int) -> list[str]:
    out = {canonical_graph6(Graph(n, a)) for a in adjs}
    return sorted(out)


# ---------------------------------------------------------------------------
# incremental forbidden checks (would adding edge (u, v) create a copy?)
# ---------------------------------------------------------------------------


def _forbid_key(forbidden: Forbidden):
    if forbidden.kind == "long_cycles":
        return ("cyc", forbidden.min_cycle)
    plen = path_length_if_path(forbidden.pattern.graph)
    if plen is not None:
        return ("path", plen)
    return ("pat", to_graph6(forbidden.pattern.graph))


def _make_creates(n: int, adj: list[int], key):
    """Checker closure over the mutable adjacency: would (u, v) complete a copy?"""
    kind = key[0]

    def _component(seed: int) -> int:
        mask = seed
        while True:
            grown = mask
            bits = mask
            while bits:
                b = bits & -bits
                bits ^= b
                grown |= adj[b.bit_length() - 1]
            if grown == mask:
                return mask
            mask = grown

    if kind == "path":
        k = key[1]

        def right(head: int, need: int, used: int) -> bool:
            if need <= 0:
                return True
            cands = adj[head] & ~used
            while cands:
                b = cands & -cands
                cands ^= b
                if right(b.bit_length() - 1, need - 1, used | b):
                    return True
            return False

        def left(head: int, vend: int, used: int, got: int) -> bool:
            if right(vend, k - 1 - got, used):
                return True
            cands = adj[head] & ~used
            while cands:
                b = cands & -cands
                cands ^= b
                if left(b.bit_length() - 1, vend, used | b, got + 1):
                    return True
            return False

        def creates(u: int, v: int) -> bool:
            seed = (1 << u) | (1 << v)
            if _component(seed).bit_count() < k + 1:
                return False
            return left(u, v, seed, 0)

        return creates

    if kind == "cyc":
        k = key[1]

        def walk(head: int, ubit: int, used: int, d: int) -> bool:
            if d + 1 >= k - 1 and adj[head] & ubit:
                return True
            cands = adj[head] & ~used & ~ubit
            while cands:
                b = cands & -cands
                cands ^= b
                if walk(b.bit_length() - 1, ubit, used | b, d + 1):
                    return True
            return False

        def creates(u: int, v: int) -> bool:
            seed = (1 << u) | (1 << v)
            if _component(seed).bit_count() < k:
                return False
            return walk(v, 1 << u, seed, 0)

        return creates

    # generic motif: anchor each directed pattern edge onto (u, v)
    pg = parse_graph6(key[1])
    from .patterns import _embedding_order

    anchors = []
    for x in range(pg.n):
        row = pg.adj[x]
        for y in range(pg.n):
            if not row >> y & 1:
                continue
            placed = (1 << x) | (1 << y)
            order = [x, y]
            degs = degrees(pg)
            while len(order) < pg.n:
                best, best_key = -1, None
                for w in range(pg.n):
                    if placed >> w & 1:
                        continue
                    score = ((pg.adj[w] & placed).bit_count(), degs[w], -w)
                    if best_key is None or score > best_key:
                        best, best_key = w, score
                order.append(best)
                placed |= 1 << best
            back = []
            for idx, w in enumerate(order):
                back.append([j for j in range(idx) if pg.adj[w] >> order[j] & 1])
            anchors.append((order, back))
    pn = pg.n
    full = (1 << n) - 1

    def creates(u: int, v: int) -> bool:
        if pn > n:
            return False
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        try:
            images = [0] * pn
            for order, back in anchors:
                images[0] = u
                images[1] = v

                def place(i: int, used: int) -> bool:
                    if i == pn:
                        return True
                    cands = full & ~used
                    for j in back[i]:
                        cands &= adj[images[j]]
                    while cands:
                        b = cands & -cands
                        cands ^= b
                        images[i] = b.bit_length() - 1
                        if place(i + 1, used | b):
                            return True
                    return False

                # the anchored pair must respect any pattern adjacency it has
                if place(2, (1 << u) | (1 << v)):
                    return True
            return False
        finally:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)

    return creates


def _counter_for(target: Pattern):
    """Fast per-leaf counter matching the motif's shape; generic fallback."""
    pg = target.graph
    plen = path_length_if_path(pg)
    if plen is not None:
        return lambda g: count_paths(plen, g)
    m = pg.n
    if edge_count(pg) == m * (m - 1) // 2:
        return lambda g: count_cliques(m, g)
    degs = sorted(degrees(pg))
    if m >= 3 and degs == [1] * (m - 1) + [m - 1]:
        return lambda g: count_stars(m - 1, g)
    if m >= 3 and degs == [2] * m and is_connected(pg):
        return lambda g: count_cycles(m, g)
    return lambda g: count_copies(target, g)


# ---------------------------------------------------------------------------
# the exhaustive sweep
# ---------------------------------------------------------------------------


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


class _TargetState:
    __slots__ = ("counter", "best", "wit", "best_conn", "wit_conn")

    def __init__(self, counter):
        self.counter = counter
        self.best = None
        self.wit: list[tuple[int, ...]] = []
        self.best_conn = None
        self.wit_conn: list[tuple[int, ...]] = []


def _sweep(n, forbid_key, target_items, prefix_bits=None, prefix_voluntary=()):
    """Enumerate forbidden-free graphs under an include/exclude prefix.

    target_items: list of (key, Pattern).  Returns
    (scanned, {key: (best, wit, best_conn, wit_conn)}) with witnesses as
    adjacency tuples of edge-maximal extremal graphs, capped.
    """
    slots = _edge_slots(n)
    m = len(slots)
    adj = [0] * n
    voluntary: list[int] = list(prefix_voluntary)
    start = 0
    if prefix_bits is not None:
        start = len(prefix_bits)
        for i, take in enumerate(prefix_bits):
            if take:
                u, v = slots[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    creates = _make_creates(n, adj, forbid_key)
    states = {key: _TargetState(_counter_for(pat)) for key, pat in target_items}
    scanned = 0

    def leaf():
        nonlocal scanned
        scanned += 1
        for idx in voluntary:
            u, v = slots[idx]
            if not creates(u, v):
                return  # a larger free graph dominates this one
        g = Graph(n, tuple(adj))
        conn = is_connected(g)
        snap = g.adj
        for st in states.values():
            c = st.counter(g)
            if st.best is None or c > st.best:
                st.best = c
                st.wit = [snap]
            elif c == st.best and len(st.wit) < WITNESS_CAP:
                st.wit.append(snap)
            if conn:
                if st.best_conn is None or c > st.best_conn:
                    st.best_conn = c
                    st.wit_conn = [snap]
                elif c == st.best_conn and len(st.wit_conn) < WITNESS_CAP:
                    st.wit_conn.append(snap)

    def rec(i: int):
        if i == m:
            leaf()
            return
        u, v = slots[i]
        if not creates(u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rec(i + 1)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            voluntary.append(i)
            rec(i + 1)
            voluntary.pop()
        else:
            rec(i + 1)

    rec(start)
    results = {
        key: (st.best, st.wit, st.best_conn, st.wit_conn) for key, st in states.items()
    }
    return scanned, results


def _prefixes(n, forbid_key, depth):
    """All admissible include/exclude prefixes of the given depth."""
    slots = _edge_slots(n)
    depth = min(depth, len(slots))
    adj = [0] * n
    creates = _make_creates(n, adj, forbid_key)
    out = []

    def rec(i, bits, voluntary):
        if i == depth:
            out.append((tuple(bits), tuple(voluntary)))
            return
        u, v = slots[i]
        if not creates(u, v):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            bits.append(1)
            rec(i + 1, bits, voluntary)
            bits.pop()
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            voluntary.append(i)
            bits.append(0)
            rec(i + 1, bits, voluntary)
            bits.pop()
            voluntary.pop()
        else:
            bits.append(0)
            rec(i + 1, bits, voluntary)
            bits.pop()

    rec(0, [], [])
    return out


def _sweep_worker(args):
    n, forbid_key, target_g6, prefix_bits, prefix_voluntary = args
    items = [(key, pattern_from_graph(parse_graph6(key))) for key in target_g6]
    return _sweep(n, forbid_key, items, prefix_bits, prefix_voluntary)


def _merge_parts(parts, keys):
    scanned = 0
    merged = {key: [None, [], None, []] for key in keys}
    for part_scanned, results in parts:
        scanned += part_scanned
        for key in keys:
            best, wit, best_c, wit_c = results[key]
            slot = merged[key]
            for bi, wi, b, w in ((0, 1, best, wit), (2, 3, best_c, wit_c)):
                if b is None:
                    continue
                if slot[bi] is None or b > slot[bi]:
                    slot[bi] = b
                    slot[wi] = list(w)
                elif b == slot[bi]:
                    room = WITNESS_CAP - len(slot[wi])
                    if room > 0:
                        slot[wi].extend(w[:room])
    return scanned, {k: tuple(v) for k, v in merged.items()}


_SWEEP_CACHE: dict = {}


def clear_sweep_cache():
    _SWEEP_CACHE.clear()


def _ex_multi(n: int, targets: dict[str, Pattern], forbidden: Forbidden, workers: int = 1):
    """Shared multi-target sweep with caching; keys are target graph6 strings."""
    forbid_key = _forbid_key(forbidden)
    cache_key = (n, forbid_key)
    cached = _SWEEP_CACHE.setdefault(cache_key, {"scanned": None, "targets": {}})
    missing = {k: p for k, p in targets.items() if k not in cached["targets"]}
    if missing:
        if workers > 1:
            prefix_depth = 6 if n >= 6 else 2
            parts_spec = _prefixes(n, forbid_key, prefix_depth)
            args = [
                (n, forbid_key, tuple(missing), bits, vol) for bits, vol in parts_spec
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_sweep_worker, args))
        else:
            parts = [_sweep(n, forbid_key, list(missing.items()))]
        scanned, results = _merge_parts(parts, list(missing))
        if cached["scanned"] is None:
            cached["scanned"] = scanned
        for key, res in results.items():
            cached["targets"][key] = res
    return cached


def _target_key(p: Pattern) -> str:
    return to_graph6(p.graph)


def brute_force_ex(
    n: int,
    target: Pattern,
    forbidden: Forbidden,
    connected_only: bool = False,
    workers: int = 1,
    allow_eight: bool = False,
) -> ExtremalRecord:
    """Exact maximum of target copies over every labelled forbidden-free graph.

    Enumerates the full 2^C(n,2) labelled space with prefix pruning; n is
    capped at 7 (8 with ``allow_eight``; expect minutes, not seconds).
    """
    cap = EXHAUSTIVE_HARD_CAP if allow_eight else EXHAUSTIVE_CAP
    if not 1 <= n <= cap:
        raise SearchError(
            f"exhaustive search capped at n <= {cap}"
            + ("" if allow_eight else " (pass allow_eight=True for n = 8)")
        )
    if target.graph.n > TARGET_VERTEX_CAP:
        raise SearchError(f"target motifs capped at {TARGET_VERTEX_CAP} vertices")
    key = _target_key(target)
    cached = _ex_multi(n, {key: target}, forbidden, workers=workers)
    best, wit, best_c, wit_c = cached["targets"][key]
    if connected_only:
        best, wit = best_c, wit_c
    return ExtremalRecord(
        n=n,
        target=target,
        forbidden=forbidden,
        connected_only=connected_only,
        max_count=best,
        witnesses=_canon_sorted(list(wit), n),
        graphs_scanned=cached["scanned"],
        mode="exhaustive",
    )


def stream_ex(
    lines,
    target: Pattern,
    forbidden: Forbidden,
    connected_only: bool = False,
) -> ExtremalRecord:
    """Extremal record over an external graph6 population (one record per line,
    uniform n, '>'-prefixed generator headers ignored)."""
    counter = _counter_for(target)
    n = None
    best = None
    wit: list[tuple[int, ...]] = []
    scanned = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(">"):
            continue
        try:
            g = parse_graph6(line)
        except Exception as exc:
            raise SearchError(f"line {lineno}: malformed graph6 record: {exc}") from exc
        if n is None:
            n = g.n
        elif g.n != n:
            raise SearchError(
                f"line {lineno}: vertex count {g.n} differs from stream's {n}"
            )
        scanned += 1
        if connected_only and not is_connected(g):
            continue
        if not is_free(g, forbidden):
            continue
        c = counter(g)
        if best is None or c > best:
            best = c
            wit = [g.adj]
        elif c == best and len(wit) < WITNESS_CAP:
            wit.append(g.adj)
    if n is None:
        raise SearchError("empty population: the stream contains no graph6 records")
    return ExtremalRecord(
        n=n,
        target=target,
        forbidden=forbidden,
        connected_only=connected_only,
        max_count=best,
        witnesses=_canon_sorted(wit, n) if best is not None else [],
        graphs_scanned=scanned,
        mode="stream",
    )


# ---------------------------------------------------------------------------
# structure predicates used by the suites
# ---------------------------------------------------------------------------


def _blocks(g: Graph) -> list[int]:
    """Biconnected blocks as vertex bitmasks (a bridge is a 2-vertex block)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    estack: list[tuple[int, int]] = []
    out: list[int] = []
    clock = [0]

    def dfs(u: int, parent: int):
        disc[u] = low[u] = clock[0]
        clock[0] += 1
        row = g.adj[u]
        skipped_parent = False
        while row:
            b = row & -row
            row ^= b
            v = b.bit_length() - 1
            if v == parent and not skipped_parent:
                skipped_parent = True
                continue
            if disc[v] == -1:
                estack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    mask = 0
                    while True:
                        x, y = estack.pop()
                        mask |= (1 << x) | (1 << y)
                        if (x, y) == (u, v):
                            break
                    out.append(mask)
            elif disc[v] < disc[u]:
                estack.append((u, v))
                low[u] = min(low[u], disc[v])

    for s in range(n):
        if disc[s] == -1 and g.adj[s]:
            dfs(s, -1)
    return out


def _is_complete_on(g: Graph, mask: int) -> bool:
    size = mask.bit_count()
    return edge_count(induced_subgraph(g, mask)) == size * (size - 1) // 2


def is_disjoint_clique_union(g: Graph, k: int) -> bool:
    """Every connected component is a complete graph on exactly k vertices."""
    return all(
        comp.bit_count() == k and _is_complete_on(g, comp) for comp in components(g)
    )


def has_clique_block_structure(g: Graph, block_size: int) -> bool:
    """Connected, and every biconnected block is a clique on ``block_size`` vertices."""
    if not is_connected(g) or g.n == 0:
        return False
    blocks = _blocks(g)
    if not blocks and g.n > 1:
        return False
    return all(
        b.bit_count() == block_size and _is_complete_on(g, b) for b in blocks
    )


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


@dataclass
class SuiteCell:
    params: dict
    expected: object
    actual: object
    status: str  # "pass" | "fail" | "diagnostic"
    witnesses: list[str] = field(default_factory=list)
    note: str = ""


@dataclass
class SuiteReport:
    suite: str
    cells: list[SuiteCell]

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.cells)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "diagnostic": 0}
        for c in self.cells:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_json(self) -> str:
        def plain(v):
            if isinstance(v, Fraction):
                return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            if isinstance(v, dict):
                return {k: plain(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [plain(x) for x in v]
            return v

        payload = {
            "schema": 1,
            "suite": self.suite,
            "cells": [
                {
                    "params": plain(c.params),
                    "expected": plain(c.expected),
                    "actual": plain(c.actual),
                    "status": c.status,
                    "witnesses": list(c.witnesses),
                    "note": c.note,
                }
                for c in self.cells
            ],
        }
        return json.dumps(payload, sort_keys=True)

    def to_tsv(self) -> str:
        def plain(v):
            if isinstance(v, Fraction):
                return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
            return str(v)

        lines = []
        for c in self.cells:
            params = ",".join(f"{k}={plain(v)}" for k, v in c.params.items())
            wits = ",".join(c.witnesses)
            lines.append(
                "\t".join(
                    [self.suite, params, plain(c.expected), plain(c.actual), c.status, wits, c.note]
                )
            )
        return "\n".join(lines)


_EDGE = make_path(1)


def _grid(params, name, default):
    if params and name in params:
        v = params[name]
        return tuple(v) if isinstance(v, (list, tuple)) else (v,)
    return default


def _workers(params):
    return int(params.get("workers", 1)) if params else 1


def suite_eg_edges(params=None) -> SuiteReport:
    """Edge maximum over path-free graphs: bound, and clique-union equality cases."""
    n_max = int(params.get("n_max", 7)) if params else 7
    ks = _grid(params, "ks", (3, 4, 5))
    w = _workers(params)
    cells = []
    for k in ks:
        forb = Forbidden.path(k)
        for n in range(3, n_max + 1):
            cached = _ex_multi(n, {_target_key(_EDGE): _EDGE}, forb, workers=w)
            best, wit, _, _ = cached["targets"][_target_key(_EDGE)]
            bound = eg_bound(n, k)
            witnesses = _canon_sorted(list(wit), n)
            if n % k == 0:
                structured = all(
                    is_disjoint_clique_union(parse_graph6(s), k) for s in witnesses
                )
                ok = best == bound and structured
                expected = f"= {bound} with disjoint K_{k} witnesses"
            else:
                ok = best < bound
                expected = f"< {bound}"
            cells.append(
                SuiteCell(
                    params={"n": n, "k": k},
                    expected=expected,
                    actual=best,
                    status="pass" if ok else "fail",
                    witnesses=witnesses if n % k == 0 else witnesses[:3],
                    note=f"free graphs scanned: {cached['scanned']}",
                )
            )
    return SuiteReport("eg_edges", cells)


def suite_eg_cycles(params=None) -> SuiteReport:
    """Edge maximum under forbidden long cycles, with block-structure equality cases."""
    n_max = int(params.get("n_max", 7)) if params else 7
    ks = _grid(params, "ks", (4, 5))
    w = _workers(params)
    cells = []
    for k in ks:
        forb = Forbidden.long_cycles(k)
        for n in range(3, n_max + 1):
            cached = _ex_multi(n, {_target_key(_EDGE): _EDGE}, forb, workers=w)
            best, wit, _, _ = cached["targets"][_target_key(_EDGE)]
            bound = eg_cycle_bound(n, k)
            witnesses = _canon_sorted(list(wit), n)
            if (n - 1) % (k - 2) == 0:
                structured = all(
                    has_clique_block_structure(parse_graph6(s), k - 1)
                    for s in witnesses
                )
                ok = best == bound and structured
                expected = f"= {bound} with all blocks K_{k - 1}"
            else:
                ok = best < bound
                expected = f"< {bound}"
            cells.append(
                SuiteCell(
                    params={"n": n, "k": k},
                    expected=expected,
                    actual=best,
                    status="pass" if ok else "fail",
                    witnesses=witnesses if (n - 1) % (k - 2) == 0 else witnesses[:3],
                )
            )
    return SuiteReport("eg_cycles", cells)


def suite_luo_cliques(params=None) -> SuiteReport:
    """Clique-count bound (n/k) C(k,r) over path-free graphs, exhaustively."""
    n_max = int(params.get("n_max", 7)) if params else 7
    ks = _grid(params, "ks", (4, 5))
    rs = _grid(params, "rs", (2, 3))
    w = _workers(params)
    cells = []
    targets = {r: make_clique(r) for r in rs}
    for k in ks:
        forb = Forbidden.path(k)
        for n in range(3, n_max + 1):
            cached = _ex_multi(
                n, {_target_key(p): p for p in targets.values()}, forb, workers=w
            )
            for r in rs:
                best = cached["targets"][_target_key(targets[r])][0]
                bound = luo_clique_bound(n, k, r)
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "r": r},
                        expected=f"<= {bound}",
                        actual=best,
                        status="pass" if best <= bound else "fail",
                    )
                )
    return SuiteReport("luo_cliques", cells)


def suite_cycle_cliques(params=None) -> SuiteReport:
    """Clique-count bound ((n-1)/(k-2)) C(k-1,r) under forbidden long cycles."""
    n_max = int(params.get("n_max", 7)) if params else 7
    ks = _grid(params, "ks", (4, 5))
    rs = _grid(params, "rs", (2, 3))
    w = _workers(params)
    cells = []
    targets = {r: make_clique(r) for r in rs}
    for k in ks:
        forb = Forbidden.long_cycles(k)
        for n in range(3, n_max + 1):
            cached = _ex_multi(
                n, {_target_key(p): p for p in targets.values()}, forb, workers=w
            )
            for r in rs:
                best = cached["targets"][_target_key(targets[r])][0]
                bound = luo_cycle_clique_bound(n, k, r)
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "r": r},
                        expected=f"<= {bound}",
                        actual=best,
                        status="pass" if best <= bound else "fail",
                    )
                )
    return SuiteReport("cycle_cliques", cells)


def suite_connected_cliques(params=None) -> SuiteReport:
    """Connected path-free triangle maximum equals the better of the two constructions."""
    cells_spec = params.get("cells", ((6, 4), (6, 5), (7, 5))) if params else (
        (6, 4),
        (6, 5),
        (7, 5),
    )
    w = _workers(params)
    k3 = make_clique(3)
    out = []
    for n, k in cells_spec:
        t = core_clique_size(k)
        expected = max(
            count_cliques(3, build_gnka(n, k, t)), count_cliques(3, build_gnka(n, k, 1))
        )
        cached = _ex_multi(n, {_target_key(k3): k3}, Forbidden.path(k), workers=w)
        best_conn = cached["targets"][_target_key(k3)][2]
        out.append(
            SuiteCell(
                params={"n": n, "k": k, "r": 3},
                expected=expected,
                actual=best_conn,
                status="pass" if best_conn == expected else "fail",
                witnesses=_canon_sorted(list(cached["targets"][_target_key(k3)][3]), n),
            )
        )
    return SuiteReport("connected_cliques", out)


def _brute_vs_construction_cells(k, ns, target, construction_value, forbid, w, rparam=None):
    """Diagnostic cells comparing small-n brute force against the construction's count.

    The exactness theorems hold above an unknown threshold, so excess below it
    is reported, never failed; witnesses are attached whenever brute force
    exceeds the construction.
    """
    cells = []
    tkey = _target_key(target)
    for n in ns:
        cached = _ex_multi(n, {tkey: target}, forbid, workers=w)
        best, wit, _, _ = cached["targets"][tkey]
        cons = construction_value(n)
        note = "matches construction" if best == cons else (
            f"brute force exceeds construction by {best - cons} (below exactness threshold)"
            if best > cons
            else f"construction exceeds brute force by {cons - best}: BUG"
        )
        status = "diagnostic" if best >= cons else "fail"
        p = {"n": n, "k": k, "forbid": forbid.describe()}
        if rparam is not None:
            p["r"] = rparam
        cells.append(
            SuiteCell(
                params=p,
                expected=f"construction value {cons}",
                actual=best,
                status=status,
                witnesses=_canon_sorted(list(wit), n)[:3] if best > cons else [],
                note=note,
            )
        )
    return cells


def suite_c4_exact(params=None) -> SuiteReport:
    """Four-cycle count of the main construction: closed form, increments, brute force."""
    n_max = int(params.get("n_max", 40)) if params else 40
    ks = _grid(params, "ks", (5, 6, 7, 8, 9))
    w = _workers(params)
    c4 = make_cycle(4)
    cells = []
    for k in ks:
        t = core_clique_size(k)
        for n in range(k + 1, n_max + 1):
            direct = count_copies(c4, build_gnka(n, k, t))
            formula = c4_exact(n, k)
            cells.append(
                SuiteCell(
                    params={"n": n, "k": k, "check": "closed_form"},
                    expected=formula,
                    actual=direct,
                    status="pass" if direct == formula else "fail",
                )
            )
        counts = {n: gnka_count(c4, n, k, t) for n in range(k + 1, n_max + 1)}
        for n in range(k + 1, n_max):
            inc = counts[n + 1] - counts[n]
            expect = diff_c4(n, k)
            cells.append(
                SuiteCell(
                    params={"n": n, "k": k, "check": "increment"},
                    expected=expect,
                    actual=inc,
                    status="pass" if inc == expect else "fail",
                )
            )
    if (params or {}).get("brute", True):
        for k in (5, 6):
            ns = [n for n in range(max(5, k + 1), 8)]
            if not ns:
                continue
            cells += _brute_vs_construction_cells(
                k, ns, c4, lambda n, k=k: int(c4_exact(n, k)), Forbidden.path(k), w
            )
            cells += _brute_vs_construction_cells(
                k, ns, c4, lambda n, k=k: int(c4_exact(n, k)), Forbidden.long_cycles(k), w
            )
    return SuiteReport("c4_exact", cells)


def suite_star_exact(params=None) -> SuiteReport:
    """Star counts of the main construction: closed form, increments, brute force."""
    n_max = int(params.get("n_max", 40)) if params else 40
    ks = _grid(params, "ks", (3, 4, 5, 6, 7, 8, 9))
    rs = _grid(params, "rs", (2, 3, 4, 5))
    w = _workers(params)
    cells = []
    for k in ks:
        t = core_clique_size(k)
        built = {n: build_gnka(n, k, t) for n in range(k, n_max + 1)}
        for r in rs:
            counts = {n: count_stars(r, built[n]) for n in built}
            for n in range(k, n_max + 1):
                formula = star_exact(n, k, r)
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "r": r, "check": "closed_form"},
                        expected=formula,
                        actual=counts[n],
                        status="pass" if counts[n] == formula else "fail",
                    )
                )
            for n in range(k, n_max):
                inc = counts[n + 1] - counts[n]
                expect = diff_star(n, k, r)
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "r": r, "check": "increment"},
                        expected=expect,
                        actual=inc,
                        status="pass" if inc == expect else "fail",
                    )
                )
    if (params or {}).get("brute", True):
        s2 = make_star(2)
        for k in (3, 4, 5):
            ns = range(max(5, k + 1), 8)
            cells += _brute_vs_construction_cells(
                k,
                ns,
                s2,
                lambda n, k=k: int(star_exact(n, k, 2)),
                Forbidden.path(k),
                w,
                rparam=2,
            )
        for k in (4, 5):
            cells += _brute_vs_construction_cells(
                k,
                range(max(5, k + 1), 8),
                s2,
                lambda n, k=k: int(star_exact(n, k, 2)),
                Forbidden.long_cycles(k),
                w,
                rparam=2,
            )
    return SuiteReport("star_exact", cells)


def suite_p3_exact(params=None) -> SuiteReport:
    """Three-edge-path increments on the construction, plus small-n brute force."""
    n_max = int(params.get("n_max", 40)) if params else 40
    ks = _grid(params, "ks", (5, 6, 7, 8, 9))
    w = _workers(params)
    p3 = make_path(3)
    cells = []
    for k in ks:
        t = core_clique_size(k)
        counts = {n: gnka_count(p3, n, k, t) for n in range(k, n_max + 1)}
        for n in range(k, n_max):
            inc = counts[n + 1] - counts[n]
            expect = diff_p3(n, k)
            cells.append(
                SuiteCell(
                    params={"n": n, "k": k, "check": "increment"},
                    expected=expect,
                    actual=inc,
                    status="pass" if inc == expect else "fail",
                )
            )
    if (params or {}).get("brute", True):
        for k in (4, 5):
            t = core_clique_size(k)
            cells += _brute_vs_construction_cells(
                k,
                range(max(5, k + 1), 8),
                p3,
                lambda n, k=k, t=t: gnka_count(p3, n, k, t),
                Forbidden.path(k),
                w,
            )
    return SuiteReport("p3_exact", cells)


def suite_p4_exact(params=None) -> SuiteReport:
    """Four-edge-path increments: closed form for k >= 7, direct difference below."""
    n_max = int(params.get("n_max", 40)) if params else 40
    ks = _grid(params, "ks", (5, 6, 7, 8, 9))
    w = _workers(params)
    p4 = make_path(4)
    cells = []
    for k in ks:
        t = core_clique_size(k)
        counts = {n: gnka_count(p4, n, k, t) for n in range(k, n_max + 1)}
        for n in range(k, n_max):
            inc = counts[n + 1] - counts[n]
            if k >= 7:
                expect = diff_p4(n, k)
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "check": "increment"},
                        expected=expect,
                        actual=inc,
                        status="pass" if inc == expect else "fail",
                    )
                )
            else:
                cells.append(
                    SuiteCell(
                        params={"n": n, "k": k, "check": "increment"},
                        expected="closed form out of range (k < 7)",
                        actual=inc,
                        status="diagnostic",
                        note="difference computed directly on the construction",
                    )
                )
    if (params or {}).get("brute", True):
        for k in (5, 6):
            t = core_clique_size(k)
            cells += _brute_vs_construction_cells(
                k,
                range(max(6, k + 1), 8),
                p4,
                lambda n, k=k, t=t: gnka_count(p4, n, k, t),
                Forbidden.path(k),
                w,
            )
    return SuiteReport("p4_exact", cells)


def suite_conjecture_5_1(params=None) -> SuiteReport:
    """Probe the even-k conjecture at desk scale, and settle the double-star count.

    The conjectured extremal graphs grow as n^(t+1) while clique unions win at
    tiny n, so disagreement below the (unknown) threshold is a diagnostic, not
    a failure.
    """
    w = _workers(params)
    cells = []
    # k = 4: the family is the double stars; maximise products a*b
    for n in (6, 7):
        g, a, b = build_hnk(n, 4)
        family = count_paths(3, g)
        paper_form = ((n - 1) // 2) * ((n - 1 + 1) // 2)
        product_form = a * b
        cells.append(
            SuiteCell(
                params={"k": 4, "n": n, "check": "double_star_count"},
                expected=f"stated closed form {paper_form}",
                actual=family,
                status="diagnostic",
                note=(
                    f"direct count of the balanced double star (a={a}, b={b}) is {family}; "
                    f"product form a*b = {product_form} "
                    + (
                        "matches the direct count; the stated floor((n-1)/2)*ceil((n-1)/2) form is off by one in n"
                        if family == product_form != paper_form
                        else "check values"
                    )
                ),
            )
        )
        tkey_p3 = make_path(3)
        cached = _ex_multi(n, {_target_key(tkey_p3): tkey_p3}, Forbidden.path(4), workers=w)
        best, wit, _, _ = cached["targets"][_target_key(tkey_p3)]
        cells.append(
            SuiteCell(
                params={"k": 4, "n": n, "check": "conjecture"},
                expected=f"family value {family}",
                actual=best,
                status="diagnostic" if best >= family else "fail",
                witnesses=_canon_sorted(list(wit), n)[:3],
                note=(
                    "family attains the maximum"
                    if best == family
                    else f"brute force exceeds the family by {best - family} below threshold"
                ),
            )
        )
    # k = 6: compare against the clique-with-two-fringes family
    p5 = make_path(5)
    for n in (6, 7):
        g, a, b = build_hnk(n, 6)
        family = count_paths(5, g)
        cached = _ex_multi(n, {_target_key(p5): p5}, Forbidden.path(6), workers=w)
        best, wit, _, _ = cached["targets"][_target_key(p5)]
        cells.append(
            SuiteCell(
                params={"k": 6, "n": n, "check": "conjecture", "a": a, "b": b},
                expected=f"family value {family}",
                actual=best,
                status="diagnostic" if best >= family else "fail",
                witnesses=_canon_sorted(list(wit), n)[:3],
                note=(
                    "family attains the maximum"
                    if best == family
                    else f"brute force exceeds the family by {best - family} below threshold"
                ),
            )
        )
    return SuiteReport("conjecture_5_1", cells)


def suite_thm_5_3(params=None) -> SuiteReport:
    """Five-edge paths under forbidden six-edge paths: family value vs brute force."""
    w = _workers(params)
    p5 = make_path(5)
    cells = []
    for n in (6, 7):
        g, a, b = build_hnk(n, 6)
        family = count_paths(5, g)
        lead = p5p6_leading(n)
        cached = _ex_multi(n, {_target_key(p5): p5}, Forbidden.path(6), workers=w)
        best, wit, _, _ = cached["targets"][_target_key(p5)]
        cells.append(
            SuiteCell(
                params={"n": n, "a": a, "b": b},
                expected=f"family value {family} (leading term {float(lead):.1f})",
                actual=best,
                status="diagnostic" if best >= family else "fail",
                witnesses=_canon_sorted(list(wit), n)[:3],
                note=(
                    "family attains the maximum"
                    if best == family
                    else f"excess {best - family} below the exactness threshold"
                ),
            )
        )
    return SuiteReport("thm_5_3", cells)


_ASYMPTOTIC_CASES = (
    # kind, k, l
    ("P_even", 5, 2),
    ("P_odd", 7, 2),
    ("C_even", 5, 2),
    ("C_odd", 7, 2),
)


def asymptotic_motif(kind: str, l: int) -> Pattern:
    if kind == "P_even":
        return make_path(2 * l)
    if kind == "P_odd":
        return make_path(2 * l + 1)
    if kind == "C_even":
        return make_cycle(2 * l)
    if kind == "C_odd":
        return make_cycle(2 * l + 1)
    raise SearchError(f"unknown asymptotic kind {kind!r}")


def asymptotic_ratios(kind: str, k: int, l: int, ns) -> dict:
    """Counts on the construction and both normalisations of the ratio.

    ``limit`` divides by the double-limit coefficient (tight only as k grows);
    ``construction`` divides by the family's own finite-k leading term, which
    the counts approach from below.  Ratios are exact rationals.
    """
    motif = asymptotic_motif(kind, l)
    t = core_clique_size(k)
    coeff, expo = leading_coeff(kind, k, l)
    ccoeff, cexpo = construction_leading_coeff(kind, k, l)
    counts = {n: gnka_count(motif, n, k, t) for n in ns}
    return {
        "counts": counts,
        "limit": {n: Fraction(counts[n]) / (coeff * n**expo) for n in ns},
        "construction": {
            n: (Fraction(counts[n]) / (ccoeff * n**cexpo)) if ccoeff else Fraction(0)
            for n in ns
        },
        "coeff": coeff,
        "exponent": expo,
        "construction_coeff": ccoeff,
    }


def suite_asymptotics(params=None) -> SuiteReport:
    """Finite-n ratio tables for the asymptotic path/cycle theorems.

    The theorems are double limits (n then k to infinity), so no band on a
    fixed-k ratio is exactly mandated; the cells report both normalisations
    and whether each increases along the n grid.
    """
    ns = tuple(_grid(params, "ns", (100, 200, 400)))
    cells = []
    for kind, k, l in _ASYMPTOTIC_CASES:
        data = asymptotic_ratios(kind, k, l, ns)
        limit = data["limit"]
        constr = data["construction"]
        incr_limit = all(limit[a] < limit[b] for a, b in zip(ns, ns[1:]))
        incr_constr = all(constr[a] < constr[b] for a, b in zip(ns, ns[1:]))
        for n in ns:
            cells.append(
                SuiteCell(
                    params={"kind": kind, "k": k, "l": l, "n": n},
                    expected=f"ratios approach 1 in the double limit (coeff {data['coeff']})",
                    actual=data["counts"][n],
                    status="diagnostic",
                    note=(
                        f"count/(coeff*n^e) = {float(limit[n]):.4f}; "
                        f"count/(family leading term) = {float(constr[n]):.4f}"
                    ),
                )
            )
        cells.append(
            SuiteCell(
                params={"kind": kind, "k": k, "l": l, "check": "monotone"},
                expected="ratios increase along the n grid",
                actual=f"limit-normalised: {incr_limit}, family-normalised: {incr_constr}",
                status="pass" if incr_limit and incr_constr else "fail",
            )
        )
    return SuiteReport("asymptotics", cells)


def suite_matching_structures(params=None) -> SuiteReport:
    """Matching-plus-dense-part motif counts stay O(n^l) on the construction:
    the normalised sequence count/n^l must be flat-or-shrinking (ratio <= 3)."""
    ks = _grid(params, "ks", (3, 4, 5, 6, 7))
    ls = _grid(params, "ls", (1, 2, 3))
    n_lo = int(params.get("n_lo", 10)) if params else 10
    n_hi = int(params.get("n_hi", 40)) if params else 40
    cells = []
    for variant in ("M1", "M2", "M3"):
        for l in ls:
            if variant == "M3" and l < 2:
                continue
            motif = make_matching_structure(variant, l)
            for k in ks:
                t = core_clique_size(k)
                ns = [n for n in range(n_lo, n_hi + 1) if n - k + t >= 0]
                vals = [Fraction(gnka_count(motif, n, k, t), n**l) for n in ns]
                if all(v == 0 for v in vals):
                    status, note = "pass", "count identically zero"
                elif all(a >= b for a, b in zip(vals, vals[1:])):
                    status, note = "pass", "normalised counts non-increasing"
                elif 0 not in vals and max(vals) / min(vals) <= 3:
                    status, note = (
                        "pass",
                        f"bounded: max/min = {float(max(vals) / min(vals)):.3f}",
                    )
                else:
                    status, note = "fail", "normalised counts grow unboundedly"
                cells.append(
                    SuiteCell(
                        params={"variant": variant, "l": l, "k": k},
                        expected="count/n^l bounded across the n grid",
                        actual=f"{float(vals[0]):.4f} .. {float(vals[-1]):.4f}",
                        status=status,
                        note=note,
                    )
                )
    return SuiteReport("matching_structures", cells)


SUITES = {
    "eg_edges": suite_eg_edges,
    "eg_cycles": suite_eg_cycles,
    "luo_cliques": suite_luo_cliques,
    "connected_cliques": suite_connected_cliques,
    "cycle_cliques": suite_cycle_cliques,
    "c4_exact": suite_c4_exact,
    "star_exact": suite_star_exact,
    "p3_exact": suite_p3_exact,
    "p4_exact": suite_p4_exact,
    "conjecture_5_1": suite_conjecture_5_1,
    "thm_5_3": suite_thm_5_3,
    "asymptotics": suite_asymptotics,
    "matching_structures": suite_matching_structures,
}


def verify_suite(suite_id: str, params: dict | None = None) -> SuiteReport:
    """Run one verification suite and return its per-cell report."""
    if suite_id not in SUITES:
        raise SearchError(f"unknown suite {suite_id!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[suite_id](params)
