"""Constructions, the closed-form count evaluator, and every formula."""

from fractions import Fraction

import pytest

from turanlab.constructions import (
    ConstructionError,
    build_gnka,
    build_hnk,
    build_srab,
    c4_exact,
    construction_leading_coeff,
    core_clique_size,
    diff_c4,
    diff_p3,
    diff_p4,
    diff_star,
    edges_gnkt,
    eg_bound,
    eg_cycle_bound,
    evaluate_formula,
    gnka_count,
    leading_coeff,
    luo_clique_bound,
    luo_cycle_clique_bound,
    p2_exact,
    p5p6_leading,
    srab_count,
    srab_path_count,
    star_exact,
)
from turanlab.graphs import degree, degrees, edge_count, induced_subgraph
from turanlab.patterns import (
    count_copies,
    count_paths,
    count_stars,
    make_clique,
    make_cycle,
    make_matching_structure,
    make_path,
    make_star,
)


# --- builders ---------------------------------------------------------------


def test_build_gnka_layout():
    g = build_gnka(10, 5, 2)
    # layout [A | C | B]: 2 + 1 + 7, clique on the first 3, join A-B only
    assert g.n == 10
    assert edge_count(g) == 17
    assert edges_gnkt(10, 5) == 17
    assert degrees(g) == [9, 9, 2] + [2] * 7
    fringe = induced_subgraph(g, range(3, 10))
    assert edge_count(fringe) == 0


def test_build_gnka_even_k_extra_edge():
    g = build_gnka(12, 6, 2)
    # the non-join part carries exactly one edge (between the two C vertices)
    rest = induced_subgraph(g, range(2, 12))
    assert edge_count(rest) == 1
    assert edge_count(g) == edges_gnkt(12, 6) == 2 * 10 + 1 + 1


def test_build_gnka_small_case():
    g = build_gnka(6, 5, 1)
    # K_4 on A u C plus 2 fringe vertices attached to the single A vertex
    assert edge_count(g) == 8
    assert degree(g, 0) == 5
    assert sorted(degrees(g)) == [1, 1, 3, 3, 3, 5]


def test_build_gnka_validation():
    with pytest.raises(ConstructionError):
        build_gnka(10, 5, 0)
    with pytest.raises(ConstructionError):
        build_gnka(10, 5, 3)  # k - 2a < 0
    with pytest.raises(ConstructionError):
        build_gnka(2, 5, 1)  # n - k + a < 0


def test_build_srab():
    g = build_srab(3, 5, 2)
    assert g.n == 10
    assert count_paths(5, g) == 80
    double_star = build_srab(2, 3, 4)
    assert sorted(degrees(double_star)) == [1] * 7 + [4, 5]
    assert build_srab(3, 0, 0) == make_clique(3).graph
    with pytest.raises(ConstructionError):
        build_srab(1, 2, 2)


def test_build_hnk_sweeps():
    g, a, b = build_hnk(10, 6)
    assert (a, b) == (5, 2)
    assert count_paths(5, g) == 80
    _, a, b = build_hnk(7, 6)
    assert (a, b) == (3, 1)
    assert count_paths(5, build_srab(3, 3, 1)) == 12
    _, a, b = build_hnk(6, 4)
    assert (a, b) == (2, 2)
    with pytest.raises(ConstructionError):
        build_hnk(10, 5)


# --- the closed-form count evaluator vs direct counting ---------------------


MOTIFS = [
    make_path(1),
    make_path(2),
    make_path(3),
    make_path(4),
    make_path(5),
    make_cycle(3),
    make_cycle(4),
    make_cycle(5),
    make_clique(4),
    make_star(3),
    make_matching_structure("M1", 2),
    make_matching_structure("M3", 2),
]


def test_gnka_count_matches_materialised():
    for k in (5, 6, 7):
        t = core_clique_size(k)
        for n in range(k, 15):
            built = build_gnka(n, k, t)
            for motif in MOTIFS:
                assert gnka_count(motif, n, k, t) == count_copies(motif, built), (
                    k,
                    n,
                    motif,
                )


def test_gnka_count_nonstandard_a():
    for n in range(6, 12):
        built = build_gnka(n, 5, 1)
        for motif in MOTIFS[:6]:
            assert gnka_count(motif, n, 5, 1) == count_copies(motif, built)


def test_srab_count_matches_materialised():
    for r in (2, 3, 4):
        for a in (0, 1, 3, 5):
            for b in (0, 1, 2):
                built = build_srab(r, a, b)
                for motif in MOTIFS[:8]:
                    assert srab_count(motif, r, a, b) == count_copies(motif, built)


def test_count_evaluator_scales_past_materialisation():
    # closed-form evaluation is exact at sizes far beyond the 64-vertex cap
    n = 400
    assert gnka_count(make_cycle(4), n, 5, 2) == c4_exact(n, 5)
    assert gnka_count(make_path(2), n, 5, 2) == p2_exact(n, 5)


# --- formulas ---------------------------------------------------------------


def test_bound_formulas():
    assert eg_bound(6, 3) == 6
    assert eg_bound(7, 4) == Fraction(21, 2)
    assert eg_cycle_bound(7, 4) == 9
    assert luo_clique_bound(7, 5, 3) == 14
    assert luo_cycle_clique_bound(7, 5, 3) == 8


def test_exact_count_formulas():
    assert c4_exact(10, 5) == 28
    assert star_exact(6, 3, 2) == 10
    assert p2_exact(6, 3) == 10
    assert srab_path_count(3, 5, 2) == 80
    assert srab_path_count(2, 3, 4) == 12
    assert srab_path_count(3, 1, 4) == 0  # needs a >= 2
    assert p5p6_leading(3) == 8


def test_formula_grid_against_counts():
    c4 = make_cycle(4)
    for k in (5, 6):
        t = core_clique_size(k)
        for n in range(k + 1, 15):
            built = build_gnka(n, k, t)
            assert count_copies(c4, built) == c4_exact(n, k)
            for r in range(2, 6):
                assert count_stars(r, built) == star_exact(n, k, r)


def test_difference_identities_small_grid():
    for k in (5, 6, 7, 8):
        t = core_clique_size(k)
        for n in range(k + 1, 20):
            assert gnka_count(make_cycle(4), n + 1, k, t) - gnka_count(
                make_cycle(4), n, k, t
            ) == diff_c4(n, k)
            for r in (2, 3, 4):
                assert star_exact(n + 1, k, r) - star_exact(n, k, r) == diff_star(
                    n, k, r
                )
            assert gnka_count(make_path(3), n + 1, k, t) - gnka_count(
                make_path(3), n, k, t
            ) == diff_p3(n, k)
            if k >= 7:
                assert gnka_count(make_path(4), n + 1, k, t) - gnka_count(
                    make_path(4), n, k, t
                ) == diff_p4(n, k)


def test_diff_p4_out_of_range():
    with pytest.raises(ConstructionError):
        diff_p4(10, 5)
    with pytest.raises(ConstructionError):
        diff_p4(10, 6)


def test_srab_path_count_matches_direct():
    for r in (2, 3):
        for a in range(0, 9):
            for b in range(0, 5):
                assert count_paths(2 * r - 1, build_srab(r, a, b)) == srab_path_count(
                    r, a, b
                )


def test_leading_coefficients():
    assert leading_coeff("P_even", 5, 2) == (Fraction(25, 8), 3)
    assert leading_coeff("P_odd", 7, 2) == (Fraction(4 * 343, 16), 3)
    assert leading_coeff("C_even", 5, 2) == (Fraction(25, 16), 2)
    assert leading_coeff("C_odd", 7, 2) == (Fraction(343, 16), 2)
    with pytest.raises(ConstructionError):
        leading_coeff("P_sideways", 5, 2)


def test_construction_leading_terms_are_tight():
    # counts over coeff * n^e climb into (0.9, 1] by n = 300 for every kind
    cases = (
        ("P_even", 5, 2, make_path(4)),
        ("P_odd", 7, 2, make_path(5)),
        ("C_even", 5, 2, make_cycle(4)),
        ("C_odd", 7, 2, make_cycle(5)),
    )
    for kind, k, l, motif in cases:
        t = core_clique_size(k)
        coeff, expo = construction_leading_coeff(kind, k, l)
        ratio = Fraction(gnka_count(motif, 300, k, t)) / (coeff * 300**expo)
        assert Fraction(9, 10) < ratio <= 1, (kind, float(ratio))


def test_formula_registry():
    res = evaluate_formula("c4_exact", n=10, k=5)
    assert res.value == 28 and res.value.denominator == 1
    assert evaluate_formula("eg_bound", n=7, k=4).value == Fraction(21, 2)
    with pytest.raises(ConstructionError):
        evaluate_formula("nope", n=1)
    with pytest.raises(ConstructionError):
        evaluate_formula("c4_exact", n=10)
    with pytest.raises(ConstructionError):
        evaluate_formula("c4_exact", n=10, k=5, r=2)
