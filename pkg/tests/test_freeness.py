"""Longest paths, circumference, and the freeness predicates."""

import random

import pytest

from conftest import naive_circumference, naive_longest_path, seeded_graphs
from turanlab.constructions import build_gnka
from turanlab.freeness import (
    Forbidden,
    ForbiddenError,
    circumference,
    has_cycle_with_at_least,
    has_path_with_edges,
    is_free,
    longest_path_edges,
)
from turanlab.graphs import from_edges
from turanlab.patterns import count_copies, make_clique, make_cycle, make_path


def complete(n, offset=0):
    return [(i + offset, j + offset) for i in range(n) for j in range(i + 1, n)]


def test_longest_path_known():
    assert longest_path_edges(from_edges(6, [(i, i + 1) for i in range(5)])) == 5
    assert longest_path_edges(from_edges(4, complete(4))) == 3
    assert longest_path_edges(build_gnka(12, 5, 2)) == 4
    assert longest_path_edges(from_edges(3, [])) == 0
    assert longest_path_edges(from_edges(0, [])) == 0


def test_circumference_known():
    tree = from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert circumference(tree) == 0
    assert circumference(from_edges(5, complete(5))) == 5
    assert circumference(build_gnka(12, 5, 2)) == 4


def test_vs_naive_oracles():
    for g in seeded_graphs(seed=41, count=20, n_max=7):
        assert longest_path_edges(g) == naive_longest_path(g)
        assert circumference(g) == naive_circumference(g)


def test_early_exit_predicates_agree():
    for g in seeded_graphs(seed=42, count=15, n_max=8):
        lp = longest_path_edges(g)
        for k in range(1, 8):
            assert has_path_with_edges(g, k) == (lp >= k)
        c = circumference(g)
        for k in range(3, 8):
            assert has_cycle_with_at_least(g, k) == (c >= k)


def test_is_free_examples():
    two_k5 = from_edges(10, complete(5) + complete(5, offset=5))
    assert is_free(two_k5, Forbidden.path(5))
    assert not is_free(two_k5, Forbidden.path(4))
    c6 = make_cycle(6).graph
    assert not is_free(c6, Forbidden.long_cycles(5))
    assert is_free(build_gnka(12, 6, 2), Forbidden.path(6))
    assert longest_path_edges(build_gnka(12, 6, 2)) == 5


def test_is_free_matches_copy_count():
    # the fast longest-path route and the generic counting route agree
    for g in seeded_graphs(seed=43, count=15, n_max=8):
        lp = longest_path_edges(g)
        for k in range(1, 8):
            pat = make_path(k)
            assert (lp < k) == (count_copies(pat, g) == 0)
            assert is_free(g, Forbidden.single(pat)) == is_free(g, Forbidden.path(k))


def test_is_free_generic_pattern():
    for g in seeded_graphs(seed=44, count=10, n_max=7):
        target = make_clique(3)
        assert is_free(g, Forbidden.single(target)) == (count_copies(target, g) == 0)


def test_monotone_under_edge_addition():
    rng = random.Random(9)
    for g in seeded_graphs(seed=45, count=10, n_max=8):
        missing = [
            (i, j)
            for i in range(g.n)
            for j in range(i + 1, g.n)
            if not g.adj[i] >> j & 1
        ]
        if not missing:
            continue
        extra = rng.choice(missing)
        edges = [
            (i, j) for i in range(g.n) for j in range(i + 1, g.n) if g.adj[i] >> j & 1
        ]
        h = from_edges(g.n, edges + [extra])
        assert longest_path_edges(h) >= longest_path_edges(g)
        assert circumference(h) >= circumference(g)


def test_construction_freeness_certificates():
    for k in range(4, 9):
        t = (k - 1) // 2
        for n in range(k + 1, 15):
            g = build_gnka(n, k, t)
            assert longest_path_edges(g) == k - 1
            assert circumference(g) == k - 1


def test_forbidden_validation():
    with pytest.raises(ForbiddenError):
        Forbidden.long_cycles(2)
    with pytest.raises(ForbiddenError):
        Forbidden.path(0)
    assert Forbidden.path(5).describe() == "path:5"
    assert Forbidden.long_cycles(4).describe() == "cycles-ge:4"
    assert Forbidden.single(make_cycle(4)).describe().startswith("g6:")
