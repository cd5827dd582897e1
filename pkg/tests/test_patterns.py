"""Motif builders, automorphism counting, and exact copy counting."""

import random
from itertools import permutations
from math import comb

import pytest

from conftest import naive_copies, naive_embeddings, naive_independence, seeded_graphs
from turanlab.constructions import build_gnka, build_srab
from turanlab.graphs import degrees, edge_count, from_edges, induced_subgraph, relabel
from turanlab.patterns import (
    PatternError,
    automorphism_order,
    contains_copy,
    count_cliques,
    count_copies,
    count_cycles,
    count_embeddings,
    count_paths,
    count_stars,
    independence_number,
    make_clique,
    make_cycle,
    make_matching_structure,
    make_path,
    make_star,
    path_length_if_path,
    pattern_from_graph,
)


def complete(n):
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# --- builders ---------------------------------------------------------------


def test_make_path():
    assert make_path(1).aut_order == 2
    assert make_path(0).aut_order == 1
    p5 = make_path(5)
    assert p5.graph.n == 6 and edge_count(p5.graph) == 5


def test_make_cycle_star_clique():
    assert make_cycle(4).aut_order == 8
    s3 = make_star(3)
    assert s3.graph.n == 4 and s3.aut_order == 6
    assert make_clique(4).aut_order == 24
    assert make_star(1).aut_order == 2
    with pytest.raises(PatternError):
        make_cycle(2)


def test_matching_structures():
    m1 = make_matching_structure("M1", 1)
    assert m1.graph.n == 3 and edge_count(m1.graph) == 3  # a bare triangle
    m2 = make_matching_structure("M2", 1)
    assert m2.graph.n == 4 and edge_count(m2.graph) == 6  # a bare K_4
    m3 = make_matching_structure("M3", 2)
    assert m3.graph.n == 6 and m3.aut_order == 72  # two disjoint triangles
    assert make_matching_structure("M1", 3).graph.n == 7
    assert make_matching_structure("M2", 3).graph.n == 8
    assert make_matching_structure("M3", 3).graph.n == 8
    with pytest.raises(PatternError):
        make_matching_structure("M3", 1)
    with pytest.raises(PatternError):
        make_matching_structure("M4", 2)


def test_pattern_invariant_aut_matches_search():
    for pat in (make_path(3), make_cycle(5), make_star(4), make_clique(3),
                make_matching_structure("M1", 2)):
        assert pat.aut_order == automorphism_order(pat.graph)


# --- automorphisms ----------------------------------------------------------


def test_automorphism_known_groups():
    assert automorphism_order(make_cycle(5).graph) == 10
    assert automorphism_order(make_path(3).graph) == 2
    assert automorphism_order(make_star(3).graph) == 6
    assert automorphism_order(from_edges(0, [])) == 1


def test_automorphism_vs_naive():
    for g in seeded_graphs(seed=21, count=20, n_max=6):
        naive = sum(
            1
            for p in permutations(range(g.n))
            if relabel(g, list(p)) == g
        )
        assert automorphism_order(g) == naive


# --- generic copy counting --------------------------------------------------


def test_count_copies_edges_and_midpoints():
    for g in seeded_graphs(seed=22, count=10, n_max=8):
        assert count_copies(make_path(1), g) == edge_count(g)
    assert count_copies(make_path(2), complete(3)) == 3


def test_count_copies_on_construction():
    assert count_copies(make_cycle(4), build_gnka(10, 5, 2)) == 28


def test_count_copies_vs_naive():
    pats = [make_path(2), make_path(3), make_cycle(3), make_cycle(4), make_star(2), make_clique(3)]
    for g in seeded_graphs(seed=23, count=12, n_max=7):
        for pat in pats:
            assert count_copies(pat, g) == naive_copies(pat.graph, pat.aut_order, g)


def test_count_copies_relabel_invariant():
    rng = random.Random(7)
    pat = make_path(3)
    for g in seeded_graphs(seed=24, count=10, n_max=8):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert count_copies(pat, relabel(g, perm)) == count_copies(pat, g)


def test_embedding_total_divisible_by_aut():
    for g in seeded_graphs(seed=25, count=10, n_max=8):
        for pat in (make_cycle(4), make_star(3), make_matching_structure("M1", 2)):
            assert count_embeddings(pat.graph, g) % pat.aut_order == 0


def test_contains_copy_matches_count():
    for g in seeded_graphs(seed=26, count=15, n_max=7):
        for pat in (make_cycle(3), make_path(4), make_clique(4)):
            assert contains_copy(pat.graph, g) == (count_copies(pat, g) > 0)


# --- specialised counters ---------------------------------------------------


def test_count_paths_known_values():
    assert count_paths(1, complete(4)) == 6
    assert count_paths(3, complete(4)) == 12
    assert count_paths(0, complete(4)) == 4
    assert count_paths(5, build_srab(3, 5, 2)) == 80


def test_specialised_counters_match_generic():
    for g in seeded_graphs(seed=27, count=10, n_max=10):
        for length in range(1, 7):
            assert count_paths(length, g) == count_copies(make_path(length), g)
        for length in range(3, 7):
            assert count_cycles(length, g) == count_copies(make_cycle(length), g)
        for r in range(1, 6):
            assert count_cliques(r, g) == count_copies(make_clique(r), g)
        for r in range(2, 6):
            assert count_stars(r, g) == count_copies(make_star(r), g)
        assert count_stars(1, g) == edge_count(g)


def test_count_cycles_and_stars_known():
    assert count_cycles(3, complete(4)) == 4
    assert count_stars(2, complete(3)) == 3
    assert count_cliques(3, build_gnka(10, 5, 2)) == 8


def test_clique_recursion_identity():
    # r * N(K_r, G) equals the sum over vertices of N(K_{r-1}, G[N(v)])
    for g in seeded_graphs(seed=28, count=10, n_max=10):
        for r in range(2, 6):
            total = sum(
                count_cliques(r - 1, induced_subgraph(g, g.adj[v]))
                for v in range(g.n)
            )
            assert r * count_cliques(r, g) == total


def test_star_degree_sum_identity():
    for g in seeded_graphs(seed=29, count=10, n_max=10):
        for r in range(2, 6):
            assert count_stars(r, g) == sum(comb(d, r) for d in degrees(g))


# --- independence number ----------------------------------------------------


def test_independence_known_values():
    assert independence_number(complete(6)) == 1
    assert independence_number(make_cycle(5).graph) == 2
    assert independence_number(build_gnka(10, 5, 2)) == 8


def test_independence_vs_naive():
    for g in seeded_graphs(seed=30, count=15, n_max=10):
        assert independence_number(g) == naive_independence(g)


def test_independence_even_k_construction():
    # with two adjacent vertices in the non-join clique part, one is lost
    assert independence_number(build_gnka(12, 6, 2)) == 12 - 2 - 1


def test_independence_embedding_lower_bound():
    # motifs with v - alpha <= t embed with their independent part in the fringe
    for motif in (make_clique(3), make_cycle(4), make_cycle(5)):
        alpha = independence_number(motif.graph)
        for k in (5, 7):
            t = (k - 1) // 2
            if motif.graph.n - alpha > t:
                continue
            n = 14
            fringe = n - k + t
            assert count_copies(motif, build_gnka(n, k, t)) >= comb(fringe, alpha)


# --- misc -------------------------------------------------------------------


def test_path_detection():
    assert path_length_if_path(make_path(4).graph) == 4
    assert path_length_if_path(make_path(0).graph) == 0
    assert path_length_if_path(make_cycle(4).graph) is None
    assert path_length_if_path(make_star(3).graph) is None
    two_edges = from_edges(4, [(0, 1), (2, 3)])
    assert path_length_if_path(two_edges) is None


def test_pattern_caps():
    with pytest.raises(PatternError):
        make_path(12)
    with pytest.raises(PatternError):
        pattern_from_graph(complete(13))
    with pytest.raises(PatternError):
        independence_number(from_edges(41, []))
