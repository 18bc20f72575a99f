from fractions import Fraction
from itertools import combinations
from math import prod

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from immpoly.graphs import Graph, build_family, lincomb_matrix
from immpoly.immanant import imm_polys
from immpoly.orientations import (
    CensusTooLarge,
    census,
    check_all_coeff_bounds,
    check_coeff_bounds,
    check_edge_monotonicity,
    check_tree_census_bounds,
    coeff_via_orientations,
    inner_sum,
    orientation_type,
    sub_selections,
)
from immpoly.partitions import dimension, enumerate_partitions, hook

from strategies import graphs

SETTINGS = [(1, -1), (1, 1), (2, 3), (Fraction(1, 2), Fraction(1, 2))]


def test_census_examples():
    P2 = build_family("path", 2)
    assert census(P2, 2).counts == {(2,): 1}
    assert census(P2, 1).counts == {(1,): 2}
    assert census(build_family("cycle", 5), 0).counts == {(): 1}


def test_orientation_type():
    assert orientation_type([0, 1, 2], {0: 1, 1: 2, 2: 0}) == (3,)
    assert orientation_type([0, 1, 2], {0: 1, 1: 0, 2: 0}) == (2, 1)
    assert orientation_type([0, 1], {0: 5, 1: 0}) == (1, 1)


def test_census_cap():
    with pytest.raises(CensusTooLarge):
        census(build_family("complete", 6), 3, cap=10)


@given(graphs(max_n=6), st.data())
def test_census_total_is_degree_product_sum(G, data):
    r = data.draw(st.integers(0, G.n))
    expected = sum(prod(G.degrees[v] for v in B) for B in combinations(range(G.n), r))
    assert census(G, r).total() == expected


@given(graphs(max_n=6), st.data())
def test_bipartite_types_have_even_cycles(G, data):
    if not G.is_bipartite():
        return
    r = data.draw(st.integers(0, G.n))
    for nu in census(G, r).counts:
        assert all(p == 1 or p % 2 == 0 for p in nu)


def test_sub_selections():
    assert sorted(sub_selections((2, 2, 1))) == [((), 1), ((2,), 2), ((2, 2), 1)]
    assert list(sub_selections((1, 1))) == [((), 1)]


def test_formula_examples():
    P3 = build_family("path", 3)
    for lam in enumerate_partitions(3):
        assert coeff_via_orientations(P3, lam, 0, 1, -1) == dimension(lam)
    P2 = build_family("path", 2)
    # det(xI - L(P_2)) = x^2 - 2x, so the top coefficient is 0
    assert coeff_via_orientations(P2, (1, 1), 2, 1, -1) == 0


@given(graphs(max_n=5), st.sampled_from(SETTINGS))
def test_formula_matches_oracle(G, bg):
    polys = imm_polys(lincomb_matrix(G, *bg))
    for r in range(G.n + 1):
        cen = census(G, r)
        for lam, p in polys.items():
            assert coeff_via_orientations(G, lam, r, *bg, cen=cen) == p.coeffs[r]


@pytest.mark.parametrize("n", range(1, 7))
def test_inner_sum_nonnegative(n):
    for r in range(n + 1):
        for nu in enumerate_partitions(r):
            for lam in enumerate_partitions(n):
                assert inner_sum(lam, nu, n) >= 0


def test_edge_monotonicity_examples():
    C4 = build_family("cycle", 4)
    for r in range(5):
        assert check_edge_monotonicity(C4, (0, 1), r).holds
    assert check_edge_monotonicity(build_family("path", 2), (0, 1), 2).holds


@given(graphs(min_n=2, max_n=6), st.data())
def test_edge_monotonicity(G, data):
    if not G.edges:
        return
    e = data.draw(st.sampled_from(G.sorted_edges()))
    r = data.draw(st.integers(0, G.n))
    assert check_edge_monotonicity(G, e, r).holds


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_census_sandwich(n):
    trees = [Graph(1, ())] if n == 1 else [Graph.from_edges(n, t.edges()) for t in nx.nonisomorphic_trees(n)]
    for T in trees:
        for r in range(n + 1):
            assert check_tree_census_bounds(T, r).holds
    S, P = census(build_family("star", 4), 4), census(build_family("path", 4), 4)
    assert all(S[nu] <= P[nu] for nu in set(S.counts) | set(P.counts))


@pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)])
def test_balanced_bipartite_census_dominates(p, q):
    big, small = build_family("complete_bipartite", p, q), build_family("complete_bipartite", p + 1, q - 1)
    for r in range(1, p + q + 1):
        a, b = census(big, r), census(small, r)
        assert all(a[nu] > b[nu] for nu in b.counts)


def test_bound_examples():
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 5 and nx.is_connected(h):
            G = Graph.from_edges(5, h.edges())
            reps = check_all_coeff_bounds(G, 1, 1, "general", lams=[hook(5, k) for k in range(1, 6)])
            assert all(r.status == "pass" for r in reps)
    for t in nx.nonisomorphic_trees(6):
        T = Graph.from_edges(6, t.edges())
        assert all(r.status == "pass" for r in check_all_coeff_bounds(T, 1, -1, "tree"))
    C6 = build_family("cycle", 6)
    assert all(r.status == "pass" for r in check_all_coeff_bounds(C6, 1, -1, "bipartite"))


def test_bound_hypotheses_reported():
    P4 = build_family("path", 4)
    assert check_coeff_bounds(P4, (2, 2), 2, 1, -2, "general").status == "skipped"
    assert check_coeff_bounds(P4, (2, 2), 2, 0, 1, "tree").status == "skipped"
    assert check_coeff_bounds(build_family("cycle", 3), (3,), 2, 1, 1, "tree").status == "skipped"
    assert check_coeff_bounds(build_family("cycle", 5), (3, 2), 2, 1, 1, "bipartite").status == "skipped"
    with pytest.raises(ValueError):
        check_coeff_bounds(P4, (2, 2), 2, 1, 1, "planar")
