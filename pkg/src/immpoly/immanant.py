"""Exact immanants, immanantal polynomials and the root/vanishing machinery.

Conventions
-----------
The immanantal polynomial of ``M`` for ``lam`` is stored through its
unsigned coefficients ``c_r`` with

    Imm_lam(x I - M) = sum_r (-1)^r c_r x^(n-r),

so ``c_0`` is the dimension of ``lam`` and ``c_n = Imm_lam(M)``.

Both immanants and coefficients come out of one kernel that buckets entry
products of (partial) permutations by cycle type; a single kernel call
therefore serves every partition ``lam`` at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import kernel
from .graphs import Graph, lincomb_matrix, star_degree
from .matrix import ExactMatrix, Number, as_fraction
from .partitions import (
    Partition,
    as_partition,
    character,
    enumerate_partitions,
    littlewood_richardson,
    pad,
)

__all__ = [
    "IntractableError",
    "Limits",
    "LIMITS",
    "cycle_type_sums",
    "immanant",
    "immanants",
    "ImmPolynomial",
    "imm_poly",
    "imm_polys",
    "imm_poly_interpolated",
    "imm_polys_interpolated",
    "ZeroBlock",
    "maximum_matching",
    "vanishes_by_zero_block",
    "laplace_expand",
    "root_multiplicity",
    "StarDegreeReport",
    "star_degree_bound_check",
]


class IntractableError(RuntimeError):
    """The requested order exceeds the configured tractability cap."""


@dataclass
class Limits:
    immanant_max_n: int = 9
    poly_max_n: int = 8


LIMITS = Limits()


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise IntractableError(f"{what} of order {n} exceeds the cap {cap}")


def _check_weight(M: ExactMatrix, lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if sum(lam) != M.n:
        raise ValueError(f"partition {lam} has weight {sum(lam)}, matrix order is {M.n}")
    return lam


def cycle_type_sums(
    M: ExactMatrix, partial: bool = False, backend: Optional[str] = None
) -> Dict[Partition, Fraction]:
    """Entry-product sums of (partial) permutations of ``M``, keyed by cycle type.

    Rational entries are scaled to integers by the common denominator ``L``;
    a bucket of weight ``r`` is divided by ``L^r`` afterwards.
    """
    L, rows = M.integer_rows()
    raw = kernel.class_sums(rows, partial, backend=backend)
    return {mu: Fraction(v, L ** sum(mu)) for mu, v in raw.items()}


def immanants(
    M: ExactMatrix, lams: Optional[Iterable[Sequence[int]]] = None, backend: Optional[str] = None
) -> Dict[Partition, Fraction]:
    """``{lam: Imm_lam(M)}`` for the given partitions (default: all of ``n``)."""
    _check_cap(M.n, LIMITS.immanant_max_n, "immanant")
    targets = enumerate_partitions(M.n) if lams is None else [_check_weight(M, l) for l in lams]
    sums = cycle_type_sums(M, partial=False, backend=backend)
    return {
        lam: sum((character(lam, mu) * s for mu, s in sums.items()), Fraction(0)) for lam in targets
    }


def immanant(M: ExactMatrix, lam: Sequence[int], backend: Optional[str] = None) -> Fraction:
    """Imm_lam(M) = sum over sigma of chi_lam(sigma) prod_i M[i, sigma(i)]."""
    lam = _check_weight(M, lam)
    return immanants(M, [lam], backend=backend)[lam]


@dataclass(frozen=True)
class ImmPolynomial:
    """Immanantal polynomial ``Imm_lam(xI - M)`` via its unsigned ``c_0..c_n``."""

    lam: Partition
    coeffs: Tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def descending(self) -> List[Fraction]:
        """Plain coefficients of ``x^n, x^(n-1), ..., x^0``."""
        return [(-1) ** r * c for r, c in enumerate(self.coeffs)]

    def evaluate(self, x: Number) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for a in self.descending():
            acc = acc * x + a
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def shift(self, c: Number) -> "ImmPolynomial":
        """Polynomial of ``M + cI``: substitutes ``x -> x - c``."""
        c = as_fraction(c)
        desc = self.descending()
        n = self.n
        out = [Fraction(0)] * (n + 1)  # ascending powers
        # (x - c)^(n-r) expanded by repeated multiplication (Horner in the shifted basis)
        for a in desc:
            nxt = [Fraction(0)] * (n + 1)
            for p, v in enumerate(out):
                if v:
                    if p + 1 <= n:
                        nxt[p + 1] += v
                    nxt[p] -= c * v
            nxt[0] += a
            out = nxt
        coeffs = tuple((-1) ** r * out[n - r] for r in range(n + 1))
        return ImmPolynomial(self.lam, coeffs)


def _coefficient_sums(M: ExactMatrix, backend: Optional[str]) -> Dict[Partition, Fraction]:
    _check_cap(M.n, LIMITS.poly_max_n, "immanantal polynomial")
    return cycle_type_sums(M, partial=True, backend=backend)


def _poly_from_sums(lam: Partition, n: int, sums: Dict[Partition, Fraction]) -> ImmPolynomial:
    coeffs = [Fraction(0)] * (n + 1)
    for mu, s in sums.items():
        coeffs[sum(mu)] += character(lam, pad(mu, n)) * s
    return ImmPolynomial(lam, tuple(coeffs))


def imm_polys(
    M: ExactMatrix, lams: Optional[Iterable[Sequence[int]]] = None, backend: Optional[str] = None
) -> Dict[Partition, ImmPolynomial]:
    """Subset expansion for many partitions from a single kernel pass.

    ``c_r`` sums, over r-subsets I and permutations sigma of I (internal
    fixed points included), chi_lam of the cycle type of sigma padded with
    ``n - r`` ones, times the product of ``M[i, sigma(i)]`` over I.
    """
    targets = enumerate_partitions(M.n) if lams is None else [_check_weight(M, l) for l in lams]
    sums = _coefficient_sums(M, backend)
    return {lam: _poly_from_sums(lam, M.n, sums) for lam in targets}


def imm_poly(M: ExactMatrix, lam: Sequence[int], backend: Optional[str] = None) -> ImmPolynomial:
    lam = _check_weight(M, lam)
    return imm_polys(M, [lam], backend=backend)[lam]


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> List[Fraction]:
    """Ascending monomial coefficients of the interpolating polynomial (Newton form)."""
    k = len(xs)
    dd = list(ys)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        # poly = poly * (x - xs[i]) + dd[i]
        nxt = [Fraction(0)] * k
        for p, v in enumerate(poly):
            if v:
                if p + 1 < k:
                    nxt[p + 1] += v
                nxt[p] -= xs[i] * v
        nxt[0] += dd[i]
        poly = nxt
    return poly


def imm_polys_interpolated(
    M: ExactMatrix, lams: Optional[Iterable[Sequence[int]]] = None, backend: Optional[str] = None
) -> Dict[Partition, ImmPolynomial]:
    """Same result as :func:`imm_polys`, by evaluating ``Imm(xI - M)`` at
    ``x = 0..n`` and interpolating exactly."""
    n = M.n
    _check_cap(n, LIMITS.poly_max_n, "immanantal polynomial")
    targets = enumerate_partitions(n) if lams is None else [_check_weight(M, l) for l in lams]
    xs = list(range(n + 1))
    values = [immanants(M.char_matrix(x), targets, backend=backend) for x in xs]
    out = {}
    for lam in targets:
        asc = _interpolate(xs, [v[lam] for v in values])
        out[lam] = ImmPolynomial(lam, tuple((-1) ** r * asc[n - r] for r in range(n + 1)))
    return out


def imm_poly_interpolated(
    M: ExactMatrix, lam: Sequence[int], backend: Optional[str] = None
) -> ImmPolynomial:
    lam = _check_weight(M, lam)
    return imm_polys_interpolated(M, [lam], backend=backend)[lam]


@dataclass(frozen=True)
class ZeroBlock:
    """An all-zero ``y x z`` submatrix with ``y + z = n + 1``."""

    y: int
    z: int
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]


def maximum_matching(support: Sequence[Sequence[int]], n_cols: int) -> List[int]:
    """Maximum bipartite matching by augmenting paths; returns ``match_of_col``."""
    match_col = [-1] * n_cols

    def augment(u: int, seen: List[bool]) -> bool:
        for v in support[u]:
            if not seen[v]:
                seen[v] = True
                if match_col[v] < 0 or augment(match_col[v], seen):
                    match_col[v] = u
                    return True
        return False

    for u in range(len(support)):
        augment(u, [False] * n_cols)
    return match_col


def vanishes_by_zero_block(M: ExactMatrix) -> Optional[ZeroBlock]:
    """Find a zero submatrix with ``y + z = n + 1``, or None when none exists.

    Such a block exists exactly when the nonzero-support bipartite graph has
    no perfect matching; the witness comes from the Konig vertex cover.
    """
    n = M.n
    support = [[j for j in range(n) if M[i, j] != 0] for i in range(n)]
    match_col = maximum_matching(support, n)
    match_row = [-1] * n
    for j, i in enumerate(match_col):
        if i >= 0:
            match_row[i] = j
    if all(j >= 0 for j in match_row):
        return None
    # alternating search from unmatched rows: Z_rows / Z_cols reachable
    reach_rows = {i for i in range(n) if match_row[i] < 0}
    reach_cols = set()
    frontier = list(reach_rows)
    while frontier:
        i = frontier.pop()
        for j in support[i]:
            if j not in reach_cols:
                reach_cols.add(j)
                w = match_col[j]
                if w >= 0 and w not in reach_rows:
                    reach_rows.add(w)
                    frontier.append(w)
    # Konig cover = (rows not reached) + (cols reached); its complement is zero
    zero_rows = sorted(reach_rows)
    zero_cols = sorted(set(range(n)) - reach_cols)
    excess = len(zero_rows) + len(zero_cols) - (n + 1)
    while excess > 0:
        if len(zero_rows) > 1:
            zero_rows.pop()
        else:
            zero_cols.pop()
        excess -= 1
    return ZeroBlock(len(zero_rows), len(zero_cols), tuple(zero_rows), tuple(zero_cols))


def laplace_expand(M: ExactMatrix, lam: Sequence[int], rows: Iterable[int]) -> Fraction:
    """Row-set expansion with Littlewood-Richardson weights.

    Sums ``c^lam_{mu,nu} Imm_mu(M[R,U]) Imm_nu(M[R',U'])`` over column sets
    ``U`` with ``|U| = |R|`` and ``mu |- r``, ``nu |- n-r``; submatrices keep
    ascending index order.  This agrees with ``Imm_lam(M)`` for the
    permanent and whenever only ``U = R`` contributes (e.g. ``M[R, R'] = 0``);
    for other characters the off-diagonal column sets carry no consistent
    sign and the two sides can differ.
    """
    lam = _check_weight(M, lam)
    n = M.n
    R = sorted(set(rows))
    if any(not 0 <= i < n for i in R):
        raise ValueError("row index out of range")
    r = len(R)
    if r == 0 or r == n:
        raise ValueError("row set must be a nonempty proper subset")
    Rc = [i for i in range(n) if i not in R]
    pairs = [
        (mu, nu, c)
        for mu in enumerate_partitions(r)
        for nu in enumerate_partitions(n - r)
        if (c := littlewood_richardson(lam, mu, nu))
    ]
    total = Fraction(0)
    for U in combinations(range(n), r):
        Uc = [j for j in range(n) if j not in U]
        top = immanants(M.submatrix(R, U))
        bottom = immanants(M.submatrix(Rc, Uc))
        for mu, nu, c in pairs:
            total += c * top[mu] * bottom[nu]
    return total


def root_multiplicity(p: ImmPolynomial, x0: Number) -> int:
    """Largest t with ``(x - x0)^t`` dividing the polynomial.

    The zero polynomial returns the sentinel ``n + 1``.
    """
    x0 = as_fraction(x0)
    if p.is_zero():
        return p.n + 1
    coeffs = p.descending()
    t = 0
    while len(coeffs) > 1:
        quotient = [coeffs[0]]
        for a in coeffs[1:]:
            quotient.append(a + quotient[-1] * x0)
        if quotient[-1] != 0:
            break
        coeffs = quotient[:-1]
        t += 1
    return t


@dataclass(frozen=True)
class StarDegreeReport:
    lam: Partition
    beta: Fraction
    gamma: Fraction
    multiplicity: int
    star_degree: int

    @property
    def holds(self) -> bool:
        return self.multiplicity >= self.star_degree


def star_degree_bound_check(G: Graph, lam: Sequence[int], beta: Number, gamma: Number) -> StarDegreeReport:
    """Multiplicity of the root beta against the star degree of connected G."""
    if not G.is_connected():
        raise ValueError("star-degree bound needs a connected graph")
    b, g = as_fraction(beta), as_fraction(gamma)
    p = imm_poly(lincomb_matrix(G, b, g), lam)
    return StarDegreeReport(p.lam, b, g, root_multiplicity(p, b), star_degree(G))
