"""Simple graphs, their D/A-combination matrices and degree/cycle/matching invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .matrix import ExactMatrix, Number, as_fraction

Edge = Tuple[int, int]

__all__ = [
    "Graph",
    "build_family",
    "parse_family",
    "graph_matrix",
    "lincomb_matrix",
    "elementary_symmetric",
    "elementary_symmetric_of",
    "cycles",
    "matchings",
    "census_C",
    "census_M",
    "triangle_degree_sums",
    "star_degree",
    "InvariantBundle",
    "invariant_bundle",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs; loops and duplicates are rejected.
    """

    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset((e[0], e[1]) for e in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        nbrs: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def remove_edge(self, e: Sequence[int]) -> "Graph":
        key = (min(e), max(e))
        if key not in self.edges:
            raise ValueError(f"{key} is not an edge")
        return Graph(self.n, self.edges - {key})

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def bipartition(self) -> Optional[Tuple[FrozenSet[int], FrozenSet[int]]]:
        """A 2-colouring ``(side0, side1)``, or None if the graph has an odd cycle."""
        colour: Dict[int, int] = {}
        for s in range(self.n):
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
                    elif colour[w] == colour[u]:
                        return None
        side0 = frozenset(v for v, c in colour.items() if c == 0)
        return side0, frozenset(range(self.n)) - side0

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else None."""
        ds = set(self.degrees)
        if len(ds) > 1:
            return None
        return ds.pop() if ds else 0

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def build_family(name: str, *params: int) -> Graph:
    """Named families with canonical labelling.

    ``path(n)``, ``cycle(n)`` follow index order, ``star(n)`` has its centre
    at ``n-1``, ``complete(n)``, and ``complete_bipartite(p, q)`` puts the
    ``p`` block on ``0..p-1``.
    """
    name = {"kbip": "complete_bipartite", "kn": "complete"}.get(name, name)
    if name == "complete_bipartite":
        if len(params) != 2:
            raise ValueError("complete_bipartite takes (p, q)")
        p, q = params
        if p < 1 or q < 1:
            raise ValueError("block sizes must be positive")
        return Graph(p + q, frozenset((i, p + j) for i in range(p) for j in range(q)))
    if len(params) != 1:
        raise ValueError(f"{name} takes a single size")
    (n,) = params
    if n < 1:
        raise ValueError("size must be positive")
    if name == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif name == "star":
        edges = [(i, n - 1) for i in range(n - 1)]
    elif name == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif name == "complete":
        edges = list(combinations(range(n), 2))
    else:
        raise ValueError(f"unknown family {name!r}")
    return Graph(n, frozenset(edges))


def parse_family(spec: str) -> Graph:
    """Parse ``"path:5"``, ``"star:4"``, ``"kbip:3,4"`` and friends."""
    try:
        name, args = spec.split(":", 1)
        params = [int(a) for a in args.split(",")]
    except ValueError:
        raise ValueError(f"bad family spec {spec!r}") from None
    return build_family(name.strip(), *params)


def lincomb_matrix(G: Graph, beta: Number, gamma: Number) -> ExactMatrix:
    """beta * D(G) + gamma * A(G)."""
    b, g = as_fraction(beta), as_fraction(gamma)
    rows = [[Fraction(0)] * G.n for _ in range(G.n)]
    for v, d in enumerate(G.degrees):
        rows[v][v] = b * d
    for u, v in G.edges:
        rows[u][v] = rows[v][u] = g
    return ExactMatrix(rows)


def graph_matrix(G: Graph, kind: str, *params: Number) -> ExactMatrix:
    """Matrix of the given kind: ``D``, ``A``, ``L``, ``Q``, ``Aalpha`` or ``lincomb``.

    ``Aalpha`` takes alpha and builds alpha*D + (1-alpha)*A; alpha is not
    restricted to [0, 1] here.  ``lincomb`` takes (beta, gamma).
    """
    if kind == "D":
        return lincomb_matrix(G, 1, 0)
    if kind == "A":
        return lincomb_matrix(G, 0, 1)
    if kind == "L":
        return lincomb_matrix(G, 1, -1)
    if kind == "Q":
        return lincomb_matrix(G, 1, 1)
    if kind == "Aalpha":
        (alpha,) = params
        a = as_fraction(alpha)
        return lincomb_matrix(G, a, 1 - a)
    if kind == "lincomb":
        beta, gamma = params
        return lincomb_matrix(G, beta, gamma)
    raise ValueError(f"unknown matrix kind {kind!r}")


def elementary_symmetric_of(values: Sequence[int], r: int) -> int:
    """e_r of a sequence of integers (0 when r > len)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    e = [1] + [0] * r
    for x in values:
        for j in range(r, 0, -1):
            e[j] += e[j - 1] * x
    return e[r]


def elementary_symmetric(G: Graph, r: int) -> int:
    """F_r(G): the r-th elementary symmetric function of the degree sequence."""
    if not 0 <= r <= G.n:
        raise ValueError(f"r={r} outside [0, {G.n}]")
    return elementary_symmetric_of(G.degrees, r)


def cycles(G: Graph, l: int) -> List[Tuple[int, ...]]:
    """Every ``l``-cycle once, as a vertex tuple.

    Each tuple starts at its smallest vertex and has ``t[1] < t[-1]``; the
    list is sorted lexicographically.
    """
    if l < 3:
        raise ValueError("cycles have length >= 3")
    adj = G.adjacency
    out: List[Tuple[int, ...]] = []

    def extend(path: List[int], used: set) -> None:
        last = path[-1]
        if len(path) == l:
            if path[0] in adj[last] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in adj[last]:
            if w > path[0] and w not in used:
                used.add(w)
                path.append(w)
                extend(path, used)
                path.pop()
                used.discard(w)

    for s in range(G.n):
        extend([s], {s})
    out.sort()
    return out


def matchings(G: Graph, l: int) -> List[Tuple[Edge, ...]]:
    """All ``l``-matchings as sorted edge tuples, lexicographic order."""
    if l < 0:
        raise ValueError("matching size must be nonnegative")
    out = []
    for es in combinations(G.sorted_edges(), l):
        verts = [v for e in es for v in e]
        if len(set(verts)) == 2 * l:
            out.append(es)
    return out


def _remaining_degrees(G: Graph, removed: Iterable[int]) -> List[int]:
    gone = set(removed)
    return [d for v, d in enumerate(G.degrees) if v not in gone]


def census_C(G: Graph, r: int, l: int) -> int:
    """Sum over l-cycles C of F_{r-l} of the degrees of vertices off C.

    Degrees are those of G itself; only the vertices of C are dropped.
    """
    if l not in (3, 4, 5):
        raise ValueError("cycle census defined for l in {3, 4, 5}")
    if r < l:
        raise ValueError("need r >= l")
    return sum(elementary_symmetric_of(_remaining_degrees(G, c), r - l) for c in cycles(G, l))


def census_M(G: Graph, r: int, l: int) -> int:
    """Sum over l-matchings of F_{r-2l} of the degrees of unmatched vertices."""
    if l not in (1, 2):
        raise ValueError("matching census defined for l in {1, 2}")
    if r < 2 * l:
        raise ValueError("need r >= 2l")
    return sum(
        elementary_symmetric_of(_remaining_degrees(G, [v for e in mt for v in e]), r - 2 * l)
        for mt in matchings(G, l)
    )


def triangle_degree_sums(G: Graph) -> List[int]:
    d = G.degrees
    return [d[a] + d[b] + d[c] for a, b, c in cycles(G, 3)]


def star_degree(G: Graph) -> int:
    """Sum over pendant-star centres of (pendant neighbours - 1)."""
    d = G.degrees
    pendants_at: Dict[int, int] = {}
    for v in range(G.n):
        if d[v] == 1:
            (c,) = G.adjacency[v]
            pendants_at[c] = pendants_at.get(c, 0) + 1
    # K_2: both ends are pendant and each is the other's centre
    return sum(max(cnt - 1, 0) for cnt in pendants_at.values())


@dataclass(frozen=True)
class InvariantBundle:
    """Every combinatorial quantity the hook coefficient formulas consume."""

    n: int
    m: int
    degrees: Tuple[int, ...]
    F: Tuple[int, ...]
    cycles: Dict[int, List[Tuple[int, ...]]]
    matchings: Dict[int, List[Tuple[Edge, ...]]]
    triangle_sums: Tuple[int, ...]
    star_degree: int

    def C(self, r: int, l: int) -> int:
        return sum(
            elementary_symmetric_of([d for v, d in enumerate(self.degrees) if v not in c], r - l)
            for c in self.cycles[l]
        )

    def M(self, r: int, l: int) -> int:
        return sum(
            elementary_symmetric_of(
                [d for v, d in enumerate(self.degrees) if v not in {x for e in mt for x in e}],
                r - 2 * l,
            )
            for mt in self.matchings[l]
        )

    @property
    def two_matchings_by_degrees(self) -> int:
        """binom(m, 2) - sum_i binom(d_i, 2), which counts 2-matchings."""
        return comb(self.m, 2) - sum(comb(d, 2) for d in self.degrees)


def invariant_bundle(G: Graph) -> InvariantBundle:
    return InvariantBundle(
        n=G.n,
        m=G.m,
        degrees=G.degrees,
        F=tuple(elementary_symmetric_of(G.degrees, r) for r in range(G.n + 1)),
        cycles={l: cycles(G, l) for l in (3, 4, 5)},
        matchings={l: matchings(G, l) for l in (1, 2)},
        triangle_sums=tuple(triangle_degree_sums(G)),
        star_degree=star_degree(G),
    )
