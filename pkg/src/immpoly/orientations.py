"""Vertex orientations of graphs and the coefficient formula built on them.

A (B)-vertex orientation gives every vertex of an ``r``-subset ``B`` one
outgoing arrow along an incident edge.  Its type is a partition of ``r``:
each directed cycle of the arrow map inside ``B`` (a doubly-arrowed edge
being a 2-cycle) contributes its length, every other arrow contributes 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graphs import Graph, build_family, elementary_symmetric, lincomb_matrix
from .immanant import imm_poly, imm_polys
from .matrix import Number, as_fraction
from .partitions import Partition, as_partition, character, enumerate_partitions, pad, to_counts

__all__ = [
    "CensusTooLarge",
    "CENSUS_CAP",
    "OrientationCensus",
    "census",
    "orientation_type",
    "sub_selections",
    "inner_sum",
    "coeff_via_orientations",
    "MonotonicityReport",
    "check_edge_monotonicity",
    "SandwichReport",
    "check_tree_census_bounds",
    "BoundReport",
    "check_coeff_bounds",
    "check_all_coeff_bounds",
]

CENSUS_CAP = 10**8


class CensusTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class OrientationCensus:
    """``counts[nu]`` = number of (B)-vertex orientations of type nu over all |B| = r."""

    r: int
    counts: Dict[Partition, int] = field(default_factory=dict)

    def __getitem__(self, nu: Sequence[int]) -> int:
        return self.counts.get(tuple(nu), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def types(self) -> List[Partition]:
        return sorted(self.counts, reverse=True)


def orientation_type(B: Sequence[int], arrow: Dict[int, int]) -> Partition:
    """Type of the orientation sending each ``v`` in ``B`` to ``arrow[v]``."""
    inside = set(B)
    state: Dict[int, int] = {}  # 0 unseen, 1 on stack, 2 done
    parts: List[int] = []
    on_cycle = set()
    for start in B:
        if state.get(start):
            continue
        path = []
        v = start
        while v in inside and not state.get(v):
            state[v] = 1
            path.append(v)
            v = arrow[v]
        if v in inside and state.get(v) == 1:
            cyc = path[path.index(v):]
            parts.append(len(cyc))
            on_cycle.update(cyc)
        for w in path:
            state[w] = 2
    parts.extend([1] * (len(B) - len(on_cycle)))
    return tuple(sorted(parts, reverse=True))


def _census_of_subset(G: Graph, B: Tuple[int, ...], counts: Counter) -> None:
    # arrows leaving B all behave alike, so they are counted with multiplicity
    inside = set(B)
    options = []
    for v in B:
        within = [w for w in G.adjacency[v] if w in inside]
        outside = G.degrees[v] - len(within)
        opts = [(w, 1) for w in within]
        if outside:
            opts.append((-1, outside))
        if not opts:
            return
        options.append(opts)
    for choice in product(*options):
        mult = 1
        arrow = {}
        for v, (w, k) in zip(B, choice):
            arrow[v] = w
            mult *= k
        counts[orientation_type(B, arrow)] += mult


def census(G: Graph, r: int, cap: int = CENSUS_CAP) -> OrientationCensus:
    """Exact a_G(nu, r) for every type nu, by enumerating all r-subsets."""
    if not 0 <= r <= G.n:
        raise ValueError(f"r={r} outside [0, {G.n}]")
    total = elementary_symmetric(G, r)
    if total > cap:
        raise CensusTooLarge(f"{total} orientations exceed the cap {cap}")
    counts: Counter = Counter()
    for B in combinations(range(G.n), r):
        _census_of_subset(G, B, counts)
    return OrientationCensus(r, {k: v for k, v in counts.items() if v})


def sub_selections(nu: Sequence[int]) -> Iterator[Tuple[Partition, int]]:
    """Pairs ``(mu, binom(nu, mu))`` over sub-multisets mu of the non-unit parts of nu."""
    counts = {l: t for l, t in to_counts(nu).items() if l >= 2}
    lengths = sorted(counts)
    for picks in product(*(range(counts[l] + 1) for l in lengths)):
        mu = tuple(sorted((l for l, t in zip(lengths, picks) for _ in range(t)), reverse=True))
        yield mu, prod(comb(counts[l], t) for l, t in zip(lengths, picks))


def _power(base: Fraction, e: int) -> Fraction:
    if e == 0:
        return Fraction(1)
    return base**e


def inner_sum(lam: Sequence[int], nu: Sequence[int], n: int) -> int:
    """sum_mu chi_lam(mu padded to n) binom(nu, mu), unweighted."""
    return sum(character(lam, pad(mu, n)) * c for mu, c in sub_selections(nu))


def coeff_via_orientations(
    G: Graph,
    lam: Sequence[int],
    r: int,
    beta: Number,
    gamma: Number,
    cen: Optional[OrientationCensus] = None,
) -> Fraction:
    """c_{lam,r}(beta D + gamma A) assembled from the orientation census.

    Each orientation type nu contributes ``a_G(nu, r)`` times the sum, over
    sub-selections mu of its cycles, of
    ``beta^(r - |mu|) gamma^|mu| chi_lam(mu + 1^(n-|mu|)) binom(nu, mu)``.
    """
    lam = as_partition(lam)
    if sum(lam) != G.n:
        raise ValueError("partition weight must equal the vertex count")
    b, g = as_fraction(beta), as_fraction(gamma)
    cen = cen if cen is not None else census(G, r)
    total = Fraction(0)
    for nu, a in cen.counts.items():
        for mu, c in sub_selections(nu):
            w = sum(mu)
            total += a * c * _power(b, r - w) * _power(g, w) * character(lam, pad(mu, G.n))
    return total


@dataclass(frozen=True)
class MonotonicityReport:
    r: int
    violations: Tuple[Tuple[Partition, int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def check_edge_monotonicity(G: Graph, e: Sequence[int], r: int) -> MonotonicityReport:
    """a_{G-e}(nu, r) <= a_G(nu, r) for every type in either census."""
    H = G.remove_edge(e)
    big, small = census(G, r), census(H, r)
    bad = tuple(
        (nu, small[nu], big[nu])
        for nu in sorted(set(big.counts) | set(small.counts), reverse=True)
        if small[nu] > big[nu]
    )
    return MonotonicityReport(r, bad)


@dataclass(frozen=True)
class SandwichReport:
    r: int
    violations: Tuple[Tuple[Partition, int, int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def check_tree_census_bounds(T: Graph, r: int) -> SandwichReport:
    """a_{S_n}(nu, r) <= a_T(nu, r) <= a_{P_n}(nu, r) for every type nu."""
    if not T.is_tree():
        raise ValueError("input is not a tree")
    n = T.n
    lo, mid, hi = census(build_family("star", n), r), census(T, r), census(build_family("path", n), r)
    types = sorted(set(lo.counts) | set(mid.counts) | set(hi.counts), reverse=True)
    bad = tuple(
        (nu, lo[nu], mid[nu], hi[nu]) for nu in types if not lo[nu] <= mid[nu] <= hi[nu]
    )
    return SandwichReport(r, bad)


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one coefficient sandwich check.

    ``status`` is ``"pass"``, ``"fail"`` or ``"skipped"`` (hypotheses unmet).
    """

    regime: str
    lam: Partition
    r: int
    status: str
    lower: Optional[Fraction] = None
    value: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    reason: str = ""

    @property
    def holds(self) -> bool:
        return self.status != "fail"


_EXTREMES = {
    "general": lambda n: build_family("complete", n),
    "tree": lambda n: build_family("path", n),
    "bipartite": lambda n: build_family("complete_bipartite", (n + 1) // 2, n // 2)
    if n >= 2
    else build_family("path", n),
}


def _hypothesis(G: Graph, beta: Fraction, gamma: Fraction, regime: str) -> str:
    if beta <= 0 or gamma == 0:
        return "needs beta > 0 and gamma != 0"
    if regime == "general":
        if gamma < -beta:
            return "needs gamma >= -beta"
        if not G.is_connected():
            return "needs a connected graph"
    elif regime == "tree":
        if not G.is_tree():
            return "needs a tree"
    elif regime == "bipartite":
        if not G.is_connected() or not G.is_bipartite():
            return "needs a connected bipartite graph"
    else:
        raise ValueError(f"unknown regime {regime!r}")
    return ""


def check_coeff_bounds(
    G: Graph, lam: Sequence[int], r: int, beta: Number, gamma: Number, regime: str
) -> BoundReport:
    """c(S_n) <= c(G) <= c(extremal graph), with c = c_{lam,r}(beta D + gamma A).

    The upper extremal graph is K_n (general), P_n (tree) or the balanced
    complete bipartite graph (bipartite).
    """
    lam = as_partition(lam)
    b, g = as_fraction(beta), as_fraction(gamma)
    why = _hypothesis(G, b, g, regime)
    if why:
        return BoundReport(regime, lam, r, "skipped", reason=why)
    n = G.n

    def coeff(H: Graph) -> Fraction:
        return imm_poly(lincomb_matrix(H, b, g), lam).coeffs[r]

    lo, val, hi = coeff(build_family("star", n)), coeff(G), coeff(_EXTREMES[regime](n))
    status = "pass" if lo <= val <= hi else "fail"
    return BoundReport(regime, lam, r, status, lo, val, hi)


def check_all_coeff_bounds(
    G: Graph, beta: Number, gamma: Number, regime: str, lams: Optional[Sequence[Sequence[int]]] = None
) -> List[BoundReport]:
    """:func:`check_coeff_bounds` for every partition (default all of n) and every r."""
    b, g = as_fraction(beta), as_fraction(gamma)
    n = G.n
    targets = [as_partition(l) for l in lams] if lams is not None else enumerate_partitions(n)
    why = _hypothesis(G, b, g, regime)
    if why:
        return [BoundReport(regime, lam, r, "skipped", reason=why) for lam in targets for r in range(n + 1)]
    polys = [
        imm_polys(lincomb_matrix(H, b, g), targets)
        for H in (build_family("star", n), G, _EXTREMES[regime](n))
    ]
    out = []
    for lam in targets:
        for r in range(n + 1):
            lo, val, hi = (p[lam].coeffs[r] for p in polys)
            out.append(BoundReport(regime, lam, r, "pass" if lo <= val <= hi else "fail", lo, val, hi))
    return out
