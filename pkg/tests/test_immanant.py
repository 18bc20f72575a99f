from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from immpoly.graphs import Graph, build_family, graph_matrix
from immpoly.immanant import (
    LIMITS,
    ImmPolynomial,
    IntractableError,
    imm_poly,
    imm_polys,
    imm_polys_interpolated,
    immanant,
    immanants,
    laplace_expand,
    root_multiplicity,
    star_degree_bound_check,
    vanishes_by_zero_block,
)
from immpoly.matrix import ExactMatrix, determinant, permanent
from immpoly.partitions import dimension, enumerate_partitions

from strategies import graphs, matrices, rationals


def test_immanant_examples():
    assert immanant(graph_matrix(build_family("star", 3), "L"), (3,)) == 4
    for n in range(2, 7):
        assert immanant(graph_matrix(build_family("path", n), "L"), (1,) * n) == 0
    assert immanant(ExactMatrix.identity(3), (2, 1)) == 2
    with pytest.raises(ValueError):
        immanant(ExactMatrix.identity(3), (2, 2))


@given(matrices(max_n=6))
def test_determinant_and_permanent_specialisations(M):
    vals = immanants(M, [(1,) * M.n, (M.n,)])
    assert vals[(1,) * M.n] == determinant(M)
    assert vals[(M.n,)] == permanent(M)


def test_polynomial_examples():
    P3 = build_family("path", 3)
    p = imm_poly(graph_matrix(P3, "L"), (2, 1))
    assert p.coeffs[1] == 8
    assert imm_poly(graph_matrix(build_family("star", 4), "L"), (2, 1, 1)).coeffs[0] == 3
    Z = imm_poly(ExactMatrix.zeros(4), (2, 2))
    assert Z.coeffs == (2, 0, 0, 0, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_identity_matrix_coefficients(n):
    for lam in enumerate_partitions(n):
        p = imm_poly(ExactMatrix.identity(n), lam)
        assert p.coeffs == tuple(comb(n, r) * dimension(lam) for r in range(n + 1))


@given(matrices(max_n=5))
def test_top_coefficients(M):
    for lam, p in imm_polys(M).items():
        assert p.coeffs[0] == dimension(lam)
        assert p.coeffs[1] == dimension(lam) * M.trace()
        assert p.coeffs[M.n] == immanant(M, lam)
    assert imm_poly(M, (1,) * M.n).coeffs[M.n] == determinant(M)


@given(matrices(max_n=5), rationals)
def test_polynomial_evaluates_to_immanant(M, x):
    for lam, p in imm_polys(M).items():
        assert p.evaluate(x) == immanant(M.char_matrix(x), lam)


@given(matrices(max_n=5))
def test_subset_expansion_matches_interpolation(M):
    assert imm_polys(M) == imm_polys_interpolated(M)


@given(matrices(max_n=5), rationals)
def test_shift_identity(M, c):
    shifted = imm_polys(M.shifted(c))
    for lam, p in imm_polys(M).items():
        assert p.shift(c) == shifted[lam]


def test_caps_are_configurable():
    M = ExactMatrix.identity(LIMITS.poly_max_n + 1)
    with pytest.raises(IntractableError):
        imm_poly(M, (M.n,))
    old = LIMITS.poly_max_n
    LIMITS.poly_max_n = M.n
    try:
        assert imm_poly(M, (M.n,)).coeffs[0] == 1
    finally:
        LIMITS.poly_max_n = old


def test_zero_block_examples():
    M = ExactMatrix([[0, 0, 1], [0, 0, 2], [3, 4, 5]])
    w = vanishes_by_zero_block(M)
    assert w is not None and w.y + w.z == 4
    assert all(M[i, j] == 0 for i in w.rows for j in w.cols)
    assert all(v == 0 for v in immanants(M).values())
    assert vanishes_by_zero_block(ExactMatrix.identity(4)) is None
    assert vanishes_by_zero_block(ExactMatrix([[1, 2], [3, 4]])) is None


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_zero_block_forces_vanishing(n, rnd):
    y = rnd.randint(1, n)
    R, C = set(rnd.sample(range(n), y)), set(rnd.sample(range(n), n + 1 - y))
    M = ExactMatrix([[0 if i in R and j in C else rnd.randint(1, 5) for j in range(n)] for i in range(n)])
    w = vanishes_by_zero_block(M)
    assert w is not None and w.y + w.z == n + 1
    assert all(M[i, j] == 0 for i in w.rows for j in w.cols)
    assert all(v == 0 for v in immanants(M).values())


def test_laplace_examples():
    assert laplace_expand(ExactMatrix.identity(3), (2, 1), [0]) == 2
    with pytest.raises(ValueError):
        laplace_expand(ExactMatrix.identity(3), (2, 1), [])
    with pytest.raises(ValueError):
        laplace_expand(ExactMatrix.identity(3), (2, 1), [0, 1, 2])


@given(matrices(min_n=2, max_n=5), st.data())
def test_laplace_permanent(M, data):
    size = data.draw(st.integers(1, M.n - 1))
    R = data.draw(st.lists(st.integers(0, M.n - 1), min_size=size, max_size=size, unique=True))
    assert laplace_expand(M, (M.n,), R) == permanent(M)


@given(st.integers(2, 5), st.data())
def test_laplace_block_triangular(n, data):
    # with M[R, R'] = 0 only U = R contributes and the expansion is exact
    size = data.draw(st.integers(1, n - 1))
    R = set(data.draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True)))
    M = ExactMatrix([[0 if (i in R and j not in R) else data.draw(rationals) for j in range(n)] for i in range(n)])
    for lam in enumerate_partitions(n):
        assert laplace_expand(M, lam, R) == immanant(M, lam)


def test_root_multiplicity_examples():
    # (x-1)^2 (x-3) = x^3 - 5x^2 + 7x - 3
    p = ImmPolynomial((1,), (Fraction(1), Fraction(5), Fraction(7), Fraction(3)))
    assert root_multiplicity(p, 1) == 2
    assert root_multiplicity(p, 3) == 1
    S4 = imm_poly(graph_matrix(build_family("star", 4), "L"), (1, 1, 1, 1))
    assert root_multiplicity(S4, 1) == 2
    assert root_multiplicity(imm_poly(graph_matrix(build_family("path", 3), "L"), (1, 1, 1)), 5) == 0
    assert root_multiplicity(imm_poly(ExactMatrix.zeros(3), (2, 1)), 0) == 3
    zero = ImmPolynomial((1, 1), (Fraction(0),) * 3)
    assert root_multiplicity(zero, 7) == 3  # sentinel n + 1


def test_star_degree_examples():
    rep = star_degree_bound_check(build_family("star", 5), (2, 1, 1, 1), 1, -1)
    assert rep.star_degree == 3 and rep.multiplicity >= 3 and rep.holds
    for lam in enumerate_partitions(4):
        assert star_degree_bound_check(build_family("cycle", 4), lam, 1, -1).holds
    rep = star_degree_bound_check(build_family("path", 3), (1, 1, 1), 1, -1)
    assert (rep.multiplicity, rep.star_degree) == (1, 1)
    with pytest.raises(ValueError):
        star_degree_bound_check(Graph(2, ()), (2,), 1, 1)


@given(graphs(min_n=1, max_n=6), st.sampled_from([(1, -1), (1, 1), (Fraction(1, 2), Fraction(1, 2)), (3, 2)]))
def test_star_degree_bound(G, bg):
    if not G.is_connected():
        return
    for lam in enumerate_partitions(G.n):
        assert star_degree_bound_check(G, lam, *bg).holds
