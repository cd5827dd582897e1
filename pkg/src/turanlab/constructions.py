"""Extremal constructions and every closed-form formula evaluated exactly.

Two families are built:

* ``gnka``: vertex classes [A | C | B] with |A| = a, |C| = k - 2a,
  |B| = n - k + a; A union C induces a clique, B is independent, and all
  A-B edges are present.  Its longest path has k - 1 edges, so it is free of
  the path with k edges.
* ``srab``: a clique on r vertices with a distinguished vertex v, an
  independent set B of size b joined to v, and an independent set A of size a
  joined to every clique vertex except v.  Free of the path with 2r edges.

Graphs above the 64-vertex cap are never materialised.  Instead, counts are
evaluated on a weighted template: B (and A) become single class vertices with
a symbolic multiplicity, the count over maps into the template is collected
as a polynomial in falling factorials of the class sizes, and the polynomial
is evaluated exactly for any n.  One template walk therefore prices a whole
n-grid.

All formula evaluation is exact rational arithmetic; floating point lives
only in the spectral module.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .graphs import Graph, from_edges
from .patterns import Pattern, _embedding_order, make_path


class ConstructionError(ValueError):
    """Raised for invalid construction or formula parameters."""


def core_clique_size(k: int) -> int:
    """The clique-side size floor((k-1)/2) used throughout the closed forms."""
    return (k - 1) // 2


def even_correction(k: int) -> int:
    """1 when k is even (one extra edge inside the big class), else 0."""
    return 1 if k % 2 == 0 else 0


# ---------------------------------------------------------------------------
# Materialised builders (n <= 64)
# ---------------------------------------------------------------------------


def _check_gnka(n: int, k: int, a: int):
    if a < 1:
        raise ConstructionError("gnka needs a >= 1")
    if k - 2 * a < 0:
        raise ConstructionError(f"gnka needs k - 2a >= 0 (k={k}, a={a})")
    if n - k + a < 0:
        raise ConstructionError(f"gnka needs n - k + a >= 0 (n={n}, k={k}, a={a})")


def build_gnka(n: int, k: int, a: int) -> Graph:
    """Materialise the three-class construction; vertex layout [A | C | B]."""
    _check_gnka(n, k, a)
    clique = k - a  # |A| + |C|
    edges = [(i, j) for i in range(clique) for j in range(i + 1, clique)]
    edges += [(i, j) for i in range(a) for j in range(clique, n)]
    return from_edges(n, edges)


def _check_srab(r: int, a: int, b: int):
    if r < 2:
        raise ConstructionError("srab needs r >= 2")
    if a < 0 or b < 0:
        raise ConstructionError("srab needs a, b >= 0")


def build_srab(r: int, a: int, b: int) -> Graph:
    """Clique of size r (distinguished vertex 0), A joined to vertices 1..r-1,
    B joined to vertex 0.  Vertex layout [clique | A | B]."""
    _check_srab(r, a, b)
    n = r + a + b
    edges = [(i, j) for i in range(r) for j in range(i + 1, r)]
    edges += [(i, j) for i in range(1, r) for j in range(r, r + a)]
    edges += [(0, j) for j in range(r + a, n)]
    return from_edges(n, edges)


def build_hnk(n: int, k: int) -> tuple[Graph, int, int]:
    """The member of the srab family on n vertices (clique size t+1) with the
    most copies of the path with k-1 edges; ties broken by smallest a."""
    if k % 2 or k < 4:
        raise ConstructionError("hnk needs even k >= 4")
    if n < k:
        raise ConstructionError(f"hnk needs n >= k (n={n}, k={k})")
    r = core_clique_size(k) + 1
    target = make_path(k - 1)
    best = None
    for a in range(n - r + 1):
        b = n - r - a
        copies = srab_count(target, r, a, b)
        if best is None or copies > best[0]:
            best = (copies, a, b)
    _, a, b = best
    return build_srab(r, a, b), a, b


# ---------------------------------------------------------------------------
# Weighted-template counting (count-only evaluator for any n)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _template_poly(
    pattern_graph: Graph, tadj: tuple[int, ...], caps: tuple[int | None, ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Embedding polynomial of a pattern into a blow-up of the template.

    Classes with cap None carry a symbolic size.  Returns pairs
    (usage-vector over symbolic classes, number of template maps with that
    usage); the embedding count at concrete sizes is
    sum coeff * prod falling_factorial(size_j, usage_j).
    """
    m = len(tadj)
    sym = [i for i, c in enumerate(caps) if c is None]
    order = _embedding_order(pattern_graph)
    pn = pattern_graph.n
    back: list[list[int]] = []
    for idx, v in enumerate(order):
        back.append([j for j in range(idx) if pattern_graph.adj[v] >> order[j] & 1])
    usage = [0] * m
    images = [0] * pn
    poly: Counter = Counter()

    def place(i: int):
        if i == pn:
            poly[tuple(usage[v] for v in sym)] += 1
            return
        bs = back[i]
        if bs:
            cands = tadj[images[bs[0]]]
            for j in bs[1:]:
                cands &= tadj[images[j]]
        else:
            cands = (1 << m) - 1
        while cands:
            bit = cands & -cands
            cands ^= bit
            t = bit.bit_length() - 1
            cap = caps[t]
            if cap is not None and usage[t] >= cap:
                continue
            usage[t] += 1
            images[i] = t
            place(i + 1)
            usage[t] -= 1

    place(0)
    return tuple(sorted(poly.items()))


def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
        if out == 0:
            return 0
    return out


def _eval_poly(poly, sizes: tuple[int, ...]) -> int:
    total = 0
    for usage, coeff in poly:
        term = coeff
        for size, u in zip(sizes, usage):
            term *= _falling(size, u)
            if term == 0:
                break
        total += term
    return total


def _gnka_template(k: int, a: int) -> tuple[tuple[int, ...], tuple[int | None, ...]]:
    clique = k - a
    m = clique + 1  # one symbolic class for B
    rows = [0] * m
    for i in range(clique):
        for j in range(i + 1, clique):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    for i in range(a):
        rows[i] |= 1 << clique
        rows[clique] |= 1 << i
    return tuple(rows), tuple([1] * clique + [None])


def _srab_template(r: int) -> tuple[tuple[int, ...], tuple[int | None, ...]]:
    m = r + 2  # symbolic classes: A at index r, B at index r + 1
    rows = [0] * m
    for i in range(r):
        for j in range(i + 1, r):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    for i in range(1, r):
        rows[i] |= 1 << r
        rows[r] |= 1 << i
    rows[0] |= 1 << (r + 1)
    rows[r + 1] |= 1
    return tuple(rows), tuple([1] * r + [None, None])


def gnka_embeddings(pattern_graph: Graph, n: int, k: int, a: int) -> int:
    """Injective embeddings of the pattern into the three-class construction,
    evaluated in closed form (valid for every n, no 64-vertex cap)."""
    _check_gnka(n, k, a)
    tadj, caps = _gnka_template(k, a)
    poly = _template_poly(pattern_graph, tadj, caps)
    return _eval_poly(poly, (n - k + a,))


def gnka_count(pattern: Pattern, n: int, k: int, a: int) -> int:
    """Copies of the motif in the three-class construction (embeddings / |Aut|)."""
    emb = gnka_embeddings(pattern.graph, n, k, a)
    if emb % pattern.aut_order:
        raise ConstructionError("embedding total not divisible by automorphism order")
    return emb // pattern.aut_order


def srab_embeddings(pattern_graph: Graph, r: int, a: int, b: int) -> int:
    _check_srab(r, a, b)
    tadj, caps = _srab_template(r)
    poly = _template_poly(pattern_graph, tadj, caps)
    return _eval_poly(poly, (a, b))


def srab_count(pattern: Pattern, r: int, a: int, b: int) -> int:
    emb = srab_embeddings(pattern.graph, r, a, b)
    if emb % pattern.aut_order:
        raise ConstructionError("embedding total not divisible by automorphism order")
    return emb // pattern.aut_order


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


@dataclass
class FormulaResult:
    formula_id: str
    params: dict
    value: Fraction


def eg_bound(n: int, k: int) -> Fraction:
    """Edge bound (k-1)n/2 for graphs with no path of k edges."""
    if k < 1 or n < 0:
        raise ConstructionError("eg_bound needs k >= 1 and n >= 0")
    return Fraction((k - 1) * n, 2)


def eg_cycle_bound(n: int, k: int) -> Fraction:
    """Edge bound (k-1)(n-1)/2 for graphs with no cycle of length >= k."""
    if k < 3 or n < 1:
        raise ConstructionError("eg_cycle_bound needs k >= 3 and n >= 1")
    return Fraction((k - 1) * (n - 1), 2)


def edges_gnkt(n: int, k: int) -> Fraction:
    """Edge count t(n-t) + C(t,2) + [k even] of the main construction."""
    t = core_clique_size(k)
    _check_gnka(n, k, t)
    return Fraction(t * (n - t) + comb(t, 2) + even_correction(k))


def luo_clique_bound(n: int, k: int, r: int) -> Fraction:
    """Clique-count bound (n/k) C(k, r) over graphs with no path of k edges."""
    if k < 2 or n < 0 or r < 1:
        raise ConstructionError("luo_clique_bound needs k >= 2, n >= 0, r >= 1")
    return Fraction(n, k) * comb(k, r)


def luo_cycle_clique_bound(n: int, k: int, r: int) -> Fraction:
    """Clique-count bound ((n-1)/(k-2)) C(k-1, r) when all cycles are shorter than k."""
    if k < 4 or n < 1 or r < 1:
        raise ConstructionError("luo_cycle_clique_bound needs k >= 4, n >= 1, r >= 1")
    return Fraction(n - 1, k - 2) * comb(k - 1, r)


def c4_exact(n: int, k: int) -> Fraction:
    """Exact 4-cycle count of the main construction (and the extremal value
    for large n)."""
    if k < 5:
        raise ConstructionError("c4_exact needs k >= 5")
    t = core_clique_size(k)
    if n < k:
        raise ConstructionError(f"c4_exact needs n >= k (n={n}, k={k})")
    eta = even_correction(k)
    return Fraction(
        comb(n - t, 2) * comb(t, 2)
        + 3 * (n - t) * comb(t, 3)
        + 3 * comb(t, 4)
        + 2 * eta * comb(t, 2)
    )


def star_exact(n: int, k: int, r: int) -> Fraction:
    """Exact count of stars with r leaves in the main construction."""
    if k < 3 or r < 2:
        raise ConstructionError("star_exact needs k >= 3 and r >= 2")
    t = core_clique_size(k)
    if n < k:
        raise ConstructionError(f"star_exact needs n >= k (n={n}, k={k})")
    eta = even_correction(k)
    return Fraction(
        t * comb(n - 1, r) + (n - t) * comb(t, r) + 2 * eta * comb(t, r - 1)
    )


def p2_exact(n: int, k: int) -> Fraction:
    """Two-edge paths are the stars with two leaves."""
    return star_exact(n, k, 2)


def diff_c4(n: int, k: int) -> Fraction:
    """One-vertex increment of the 4-cycle count: C(t,2)(n-2)."""
    if k < 5:
        raise ConstructionError("diff_c4 needs k >= 5")
    t = core_clique_size(k)
    return Fraction(comb(t, 2) * (n - 2))


def diff_star(n: int, k: int, r: int) -> Fraction:
    """One-vertex increment of the star count: C(t,r) + t C(n-1, r-1)."""
    if k < 3 or r < 2:
        raise ConstructionError("diff_star needs k >= 3 and r >= 2")
    t = core_clique_size(k)
    return Fraction(comb(t, r) + t * comb(n - 1, r - 1))


def diff_p3(n: int, k: int) -> Fraction:
    """One-vertex increment of the three-edge-path count."""
    if k < 5:
        raise ConstructionError("diff_p3 needs k >= 5")
    t = core_clique_size(k)
    eta = even_correction(k)
    return Fraction(
        2 * t * (comb(t - 1, 2) + (n - t) * (t - 1) + eta) + t * (t - 1) * (n - 2)
    )


def diff_p4(n: int, k: int) -> Fraction:
    """One-vertex increment of the four-edge-path count.

    The closed form references smaller constructions (parameters k-2 and k-4);
    those go degenerate below k = 7, where callers must fall back to counting
    the difference directly.  Inner quantities are evaluated on the
    constructions themselves, not through the star closed form.
    """
    if k < 7:
        raise ConstructionError(
            "diff_p4 closed form needs k >= 7; compute the difference directly below that"
        )
    t = core_clique_size(k)
    if n < k:
        raise ConstructionError(f"diff_p4 needs n >= k (n={n}, k={k})")
    inner_p2 = gnka_count(make_path(2), n - 1, k - 2, t - 1)
    inner_edges = gnka_count(make_path(1), n - 2, k - 4, t - 2)
    return Fraction(
        2 * t * inner_p2
        + 2 * t * (t - 1) * inner_edges
        + comb(t, 2) * (n - 2) * (n - 3)
    )


def srab_path_count(r: int, a: int, b: int) -> Fraction:
    """Closed-form count of paths with 2r-1 edges in the srab construction:
    (r-1)! * b * a (a-1) ... (a-r+2)."""
    _check_srab(r, a, b)
    out = 1
    for i in range(2, r):
        out *= i
    out *= b
    out *= _falling(a, r - 1)
    return Fraction(out)


_LEADING_KINDS = ("P_even", "P_odd", "C_even", "C_odd")


def leading_coeff(kind: str, k: int, l: int) -> tuple[Fraction, int]:
    """Asymptotic leading (coefficient, exponent) pairs for the extremal counts
    of paths/cycles with 2l or 2l+1 edges when paths with k edges are forbidden.

    These are the double-limit constants (n then k to infinity); at fixed k the
    built family's own leading term is smaller, see
    :func:`construction_leading_coeff`.
    """
    if kind not in _LEADING_KINDS:
        raise ConstructionError(f"unknown leading-coefficient kind {kind!r}")
    if l < 1 or k < 2:
        raise ConstructionError("leading_coeff needs l >= 1 and k >= 2")
    if kind == "P_even":
        return Fraction(k**l, 2 ** (l + 1)), l + 1
    if kind == "P_odd":
        return Fraction((l + 2) * k ** (l + 1), 2 ** (l + 2)), l + 1
    if kind == "C_even":
        return Fraction(k**l, l * 2 ** (l + 1)), l
    return Fraction(k ** (l + 1), 2 ** (l + 2)), l


def construction_leading_coeff(kind: str, k: int, l: int) -> tuple[Fraction, int]:
    """Leading (coefficient, exponent) of the same counts on the built family
    at fixed k, in terms of the falling factorial of t = floor((k-1)/2):

    P_even  t_(l) / 2            C_even  t_(l) / (2l)
    P_odd   (l+2) t_(l+1) / 2    C_odd   t_(l+1) / 2

    The ratio of these to :func:`leading_coeff` tends to 1 only as k grows.
    """
    if kind not in _LEADING_KINDS:
        raise ConstructionError(f"unknown leading-coefficient kind {kind!r}")
    t = core_clique_size(k)
    if kind == "P_even":
        return Fraction(_falling(t, l), 2), l + 1
    if kind == "P_odd":
        return Fraction((l + 2) * _falling(t, l + 1), 2), l + 1
    if kind == "C_even":
        return Fraction(_falling(t, l), 2 * l), l
    return Fraction(_falling(t, l + 1), 2), l


def p5p6_leading(n: int) -> Fraction:
    """Leading term 8 n^3 / 27 for five-edge paths when six-edge paths are forbidden."""
    return Fraction(8 * n**3, 27)


FORMULAS = {
    "eg_bound": (eg_bound, ("n", "k")),
    "eg_cycle_bound": (eg_cycle_bound, ("n", "k")),
    "edges_gnkt": (edges_gnkt, ("n", "k")),
    "luo_clique_bound": (luo_clique_bound, ("n", "k", "r")),
    "luo_cycle_clique_bound": (luo_cycle_clique_bound, ("n", "k", "r")),
    "c4_exact": (c4_exact, ("n", "k")),
    "star_exact": (star_exact, ("n", "k", "r")),
    "p2_exact": (p2_exact, ("n", "k")),
    "diff_c4": (diff_c4, ("n", "k")),
    "diff_star": (diff_star, ("n", "k", "r")),
    "diff_p3": (diff_p3, ("n", "k")),
    "diff_p4": (diff_p4, ("n", "k")),
    "srab_path_count": (srab_path_count, ("r", "a", "b")),
    "p5p6_leading": (p5p6_leading, ("n",)),
}


def evaluate_formula(formula_id: str, **params) -> FormulaResult:
    """Evaluate a registered closed form at integer parameters, exactly."""
    if formula_id not in FORMULAS:
        raise ConstructionError(f"unknown formula id {formula_id!r}")
    fn, names = FORMULAS[formula_id]
    missing = [p for p in names if p not in params]
    extra = [p for p in params if p not in names]
    if missing or extra:
        raise ConstructionError(
            f"{formula_id} takes parameters {names}; missing {missing}, extra {extra}"
        )
    value = fn(**{p: params[p] for p in names})
    return FormulaResult(formula_id=formula_id, params=dict(params), value=value)
