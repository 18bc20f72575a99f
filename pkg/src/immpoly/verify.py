"""Exhaustive verification sweeps, one function per identity family.

Every suite returns a :class:`SuiteResult` holding the number of checks,
the skipped cases and a list of failure witnesses (JSON-ready dicts).
Graph sweeps read the networkx atlas (all graphs up to 7 vertices) and
networkx's non-isomorphic tree generator.
"""

from __future__ import annotations

import csv
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from importlib import resources
from itertools import combinations
from math import factorial
from typing import Any, Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

import networkx as nx

from .graph6 import emit_graph6, iter_graph6_file, parse_graph6
from .graphs import Graph, graph_matrix, invariant_bundle, lincomb_matrix, star_degree
from .hooks import (
    AUDITED,
    MIN_ORDER,
    PRINTED,
    CANDIDATES,
    hook_coeff_closed,
    merris_second,
    permanental,
    regular_equivalence_check,
)
from .immanant import (
    immanants,
    imm_polys,
    imm_polys_interpolated,
    laplace_expand,
    root_multiplicity,
    vanishes_by_zero_block,
)
from .matrix import ExactMatrix, as_fraction, determinant, format_rational, parse_rational, permanent
from .orientations import census, check_all_coeff_bounds, coeff_via_orientations
from .partitions import (
    character,
    class_size,
    enumerate_partitions,
    hook,
    hook_character_32,
    hook_character_identity,
    hook_character_involution,
    hook_character_lcycle,
    pad,
)

Setting = Tuple[Fraction, Fraction]

MAX_WITNESSES = 25


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    skipped: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    failure_count: int = 0
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, **witness: Any) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(_jsonable(witness))

    def merge(self, other: "SuiteResult") -> None:
        self.checks += other.checks
        self.skipped += other.skipped
        self.failure_count += other.failure_count
        room = MAX_WITNESSES - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "status": "pass" if self.passed else "fail",
            "checks": self.checks,
            "skipped": self.skipped,
            "failure_count": self.failure_count,
            "failures": self.failures,
            **_jsonable(self.extra),
        }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Graph):
        return emit_graph6(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _settings(pairs: Iterable[Sequence[Any]]) -> List[Setting]:
    return [(as_fraction(b), as_fraction(g)) for b, g in pairs]


# graph sources ---------------------------------------------------------------

def atlas_graphs(max_n: int, min_n: int = 1, connected: bool = False) -> Iterator[Graph]:
    """Graphs of the networkx atlas with ``min_n <= n <= max_n`` (at most 7)."""
    if max_n > 7:
        raise ValueError("the atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        G = Graph.from_edges(n, h.edges())
        if connected and not G.is_connected():
            continue
        yield G


def trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1, ())
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph.from_edges(n, t.edges())


def data_file(name: str):
    return resources.files("immpoly") / "data" / name


def cubic_graphs(n: int) -> List[Graph]:
    with resources.as_file(data_file(f"cubic_{n}.g6")) as path:
        return list(iter_graph6_file(path))


def _fan_out(fn: Callable[[Any], SuiteResult], items: Sequence[Any], jobs: int, name: str) -> SuiteResult:
    """Map ``fn`` over ``items`` (in a process pool when ``jobs > 1``); order-stable merge."""
    total = SuiteResult(name)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        parts = map(fn, items)
    for part in parts:
        total.merge(part)
    return total


# characters -----------------------------------------------------------------

def suite_characters(max_n: int = 7, closed_max_n: int = 9) -> SuiteResult:
    """Row and column orthogonality, plus the hook fast paths against the recursion."""
    res = SuiteResult("characters")
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        table = {lam: [character(lam, mu) for mu in parts] for lam in parts}
        sizes = [class_size(mu) for mu in parts]
        for a in parts:
            for b in parts:
                got = sum(s * x * y for s, x, y in zip(sizes, table[a], table[b]))
                res.checks += 1
                if got != (factorial(n) if a == b else 0):
                    res.fail(kind="row", n=n, lam=a, rho=b, value=got)
        for i, mu in enumerate(parts):
            for j, nu in enumerate(parts):
                got = sum(table[lam][i] * table[lam][j] for lam in parts)
                res.checks += 1
                if got != (factorial(n) // sizes[i] if i == j else 0):
                    res.fail(kind="column", n=n, mu=mu, nu=nu, value=got)
    for n in range(1, closed_max_n + 1):
        for k in range(1, n + 1):
            lam = hook(n, k)
            cases = [("identity", (), hook_character_identity(n, k), (1,) * n)]
            for l in range(2, n + 1):
                cases.append(("cycle", (l,), hook_character_lcycle(n, k, l), pad((l,), n)))
            for i in range(1, n // 2 + 1):
                if 2 * i < n:  # the closed form needs a fixed point
                    cases.append(("involution", (i,), hook_character_involution(n, k, i), pad((2,) * i, n)))
            if n >= 5:
                cases.append(("3,2", (), hook_character_32(n, k), pad((3, 2), n)))
            for kind, args, fast, mu in cases:
                res.checks += 1
                slow = character(lam, mu)
                if fast != slow:
                    res.fail(kind=kind, n=n, k=k, args=args, closed=fast, recursion=slow)
    return res


# immanant specialisations ------------------------------------------------------

def random_rational_matrix(n: int, rng: random.Random, span: int = 5, den: int = 4) -> ExactMatrix:
    return ExactMatrix(
        [[Fraction(rng.randint(-span, span), rng.randint(1, den)) for _ in range(n)] for _ in range(n)]
    )


def suite_specializations(max_n: int = 7, count: int = 200, seed: int = 0) -> SuiteResult:
    """Imm_(1^n) = det and Imm_(n) = per on random rational matrices."""
    res = SuiteResult("specializations")
    rng = random.Random(seed)
    for t in range(count):
        n = 1 + t % max_n
        M = random_rational_matrix(n, rng)
        vals = immanants(M, [(1,) * n, (n,)])
        res.checks += 2
        if vals[(1,) * n] != determinant(M):
            res.fail(kind="det", rows=M.rows, immanant=vals[(1,) * n], oracle=determinant(M))
        if vals[(n,)] != permanent(M):
            res.fail(kind="per", rows=M.rows, immanant=vals[(n,)], oracle=permanent(M))
    return res


# oracle pair -------------------------------------------------------------------

DEFAULT_KINDS: Tuple[Tuple[str, Tuple[Fraction, ...]], ...] = (
    ("L", ()),
    ("Q", ()),
    ("A", ()),
    ("Aalpha", (Fraction(1, 3),)),
    ("lincomb", (Fraction(2), Fraction(3))),
)


def _oracle_pair_one(G: Graph, kinds) -> SuiteResult:
    res = SuiteResult("oracle-pair")
    for kind, params in kinds:
        M = graph_matrix(G, kind, *params)
        a, b = imm_polys(M), imm_polys_interpolated(M)
        for lam in a:
            res.checks += 1
            if a[lam] != b[lam]:
                res.fail(graph=G, kind=kind, params=params, lam=lam,
                         subset=a[lam].coeffs, interpolated=b[lam].coeffs)
    return res


def suite_oracle_pair(max_n: int = 6, kinds=DEFAULT_KINDS, jobs: int = 1) -> SuiteResult:
    """Subset expansion against evaluation and interpolation, connected graphs."""
    graphs = list(atlas_graphs(max_n, connected=True))
    return _fan_out(partial(_oracle_pair_one, kinds=kinds), graphs, jobs, "oracle-pair")


# orientation formula -------------------------------------------------------------

ORIENTATION_SETTINGS = ((1, -1), (1, 1), (2, 3), (Fraction(1, 2), Fraction(1, 2)))


def _orientation_one(G: Graph, settings: List[Setting]) -> SuiteResult:
    res = SuiteResult("orientation-formula")
    lams = enumerate_partitions(G.n)
    censuses = [census(G, r) for r in range(G.n + 1)]
    for b, g in settings:
        polys = imm_polys(lincomb_matrix(G, b, g), lams)
        for lam in lams:
            for r in range(G.n + 1):
                res.checks += 1
                got = coeff_via_orientations(G, lam, r, b, g, cen=censuses[r])
                want = polys[lam].coeffs[r]
                if got != want:
                    res.fail(graph=G, lam=lam, r=r, beta=b, gamma=g, formula=got, oracle=want)
    return res


def suite_orientation_formula(max_n: int = 5, settings=ORIENTATION_SETTINGS, jobs: int = 1) -> SuiteResult:
    """Orientation-census formula against the oracle for every graph (connected or not)."""
    graphs = list(atlas_graphs(max_n))
    return _fan_out(partial(_orientation_one, settings=_settings(settings)), graphs, jobs, "orientation-formula")


# bounds ------------------------------------------------------------------------

BOUND_SETTINGS = ((1, 1), (1, -1), (2, -1))


def _bounds_one(item: Tuple[str, Graph], settings: List[Setting]) -> SuiteResult:
    regime, G = item
    res = SuiteResult("bounds")
    for b, g in settings:
        for rep in check_all_coeff_bounds(G, b, g, regime):
            if rep.status == "skipped":
                res.skipped += 1
                continue
            res.checks += 1
            if rep.status == "fail":
                res.fail(regime=regime, graph=G, lam=rep.lam, r=rep.r, beta=b, gamma=g,
                         lower=rep.lower, value=rep.value, upper=rep.upper)
    return res


def suite_bounds(
    general_max_n: int = 6,
    tree_max_n: int = 8,
    bipartite_max_n: int = 7,
    settings=BOUND_SETTINGS,
    jobs: int = 1,
) -> SuiteResult:
    """Star-to-extremal sandwiches in the general, tree and bipartite regimes."""
    items: List[Tuple[str, Graph]] = []
    items += [("general", G) for G in atlas_graphs(general_max_n, connected=True)]
    items += [("tree", T) for n in range(1, tree_max_n + 1) for T in trees(n)]
    items += [
        ("bipartite", G)
        for G in atlas_graphs(min(bipartite_max_n, 7), connected=True)
        if G.is_bipartite()
    ]
    res = _fan_out(partial(_bounds_one, settings=_settings(settings)), items, jobs, "bounds")
    res.extra["graphs"] = {
        r: sum(1 for reg, _ in items if reg == r) for r in ("general", "tree", "bipartite")
    }
    return res


# hook closed forms -----------------------------------------------------------------

HOOK_SETTINGS = ((1, -1), (1, 1), (0, 1), (2, 3))


def _hook_one(G: Graph, settings: List[Setting]) -> SuiteResult:
    res = SuiteResult("hook-closed-forms")
    n = G.n
    inv = invariant_bundle(G)
    lams = [hook(n, k) for k in range(2, n + 1)]
    for b, g in settings:
        polys = imm_polys(lincomb_matrix(G, b, g), lams)
        for k in range(2, n + 1):
            for r in range(0, 6):
                if r > n or n < MIN_ORDER[r]:
                    res.skipped += 1
                    continue
                res.checks += 1
                got = hook_coeff_closed(G, k, r, b, g, inv=inv)
                want = polys[hook(n, k)].coeffs[r]
                if got != want:
                    res.fail(graph=G, k=k, r=r, beta=b, gamma=g, closed=got, oracle=want)
    return res


def read_deviations(text: str) -> List[Dict[str, str]]:
    names = ["term_id", "printed", "oracle", "witness", "k", "r", "beta", "gamma", "note"]
    rows = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
    return [dict(zip(names, row)) for row in csv.reader(rows)]


def shipped_deviations() -> List[Dict[str, str]]:
    return read_deviations(data_file("deviations.csv").read_text())


def check_deviation_record(rec: Dict[str, str]) -> bool:
    """True when the recorded witness separates the departing reading from the oracle."""
    G = parse_graph6(rec["witness"])
    k, r = int(rec["k"]), int(rec["r"])
    b, g = parse_rational(rec["beta"]), parse_rational(rec["gamma"])
    key = rec["term_id"]
    value = int(rec["printed"][1:]) if rec["printed"].startswith("x") else (1 if rec["printed"] == "+" else -1)
    oracle = imm_polys(lincomb_matrix(G, b, g), [hook(G.n, k)])[hook(G.n, k)].coeffs[r]
    good = hook_coeff_closed(G, k, r, b, g)
    if rec["printed"] == rec["oracle"]:
        return good == oracle and value == AUDITED[key]
    bad = hook_coeff_closed(G, k, r, b, g, reading={key: value})
    return good == oracle and bad != oracle


def suite_hook_closed_forms(
    max_n: int = 6, include_7: bool = True, settings=HOOK_SETTINGS, jobs: int = 1
) -> SuiteResult:
    """Closed-form hook coefficients against the oracle, plus the deviations file audit."""
    graphs = list(atlas_graphs(min(max_n, 7), connected=True))
    if include_7 and max_n < 7:
        graphs += list(atlas_graphs(7, min_n=7, connected=True))
    res = _fan_out(partial(_hook_one, settings=_settings(settings)), graphs, jobs, "hook-closed-forms")
    expected = {k for k, v in PRINTED.items() if v != AUDITED[k]}
    expected |= set(CANDIDATES)
    records = shipped_deviations()
    listed = {rec["term_id"] for rec in records}
    res.checks += 1
    if listed != expected:
        res.fail(kind="deviations-file", missing=sorted(expected - listed), extra=sorted(listed - expected))
    for rec in records:
        res.checks += 1
        if not check_deviation_record(rec):
            res.fail(kind="deviation-witness", record=rec)
    res.extra["graphs"] = len(graphs)
    res.extra["deviations"] = records
    return res


# second-immanant and permanental forms ------------------------------------------

def suite_special_forms(max_n: int = 7) -> SuiteResult:
    """Second-immanant Laplacian and permanental adjacency forms, against both sources."""
    res = SuiteResult("special-forms")
    for G in atlas_graphs(max_n):
        n = G.n
        inv = invariant_bundle(G)
        if n >= 2:
            p = imm_polys(graph_matrix(G, "L"), [hook(n, 2)])[hook(n, 2)]
            for r in range(4):
                if n < MIN_ORDER[r]:
                    continue
                res.checks += 1
                a, b, c = merris_second(G, r, inv), hook_coeff_closed(G, 2, r, 1, -1, inv=inv), p.coeffs[r]
                if not a == b == c:
                    res.fail(kind="second", graph=G, r=r, special=a, general=b, oracle=c)
        p = imm_polys(graph_matrix(G, "A"), [(n,)])[(n,)]
        for r in range(min(4, n) + 1):
            if n < MIN_ORDER[r]:
                continue
            res.checks += 1
            a, b, c = permanental(G, r, inv), hook_coeff_closed(G, n, r, 0, 1, inv=inv), p.coeffs[r]
            if not a == b == c:
                res.fail(kind="permanental", graph=G, r=r, special=a, general=b, oracle=c)
    return res


# row-set expansion ---------------------------------------------------------------

def suite_laplace(max_n: int = 6, max_rows: int = 3, samples: int = 2, seed: int = 1) -> SuiteResult:
    """Littlewood-Richardson row-set expansion against the direct immanant."""
    res = SuiteResult("laplace")
    rng = random.Random(seed)
    for n in range(2, max_n + 1):
        for _ in range(samples):
            M = ExactMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
            direct = immanants(M)
            for size in range(1, min(max_rows, n - 1) + 1):
                for R in combinations(range(n), size):
                    for lam, want in direct.items():
                        res.checks += 1
                        got = laplace_expand(M, lam, R)
                        if got != want:
                            res.fail(rows=M.rows, lam=lam, R=R, expansion=got, immanant=want)
    return res


# zero-block vanishing --------------------------------------------------------------

def structured_zero_block_matrix(n: int, rng: random.Random) -> Tuple[ExactMatrix, int, int]:
    y = rng.randint(1, n)
    z = n + 1 - y
    rows = set(rng.sample(range(n), y))
    cols = set(rng.sample(range(n), z))
    M = ExactMatrix(
        [
            [0 if (i in rows and j in cols) else Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
             for j in range(n)]
            for i in range(n)
        ]
    )
    return M, y, z


def suite_zero_block(max_n: int = 6, count: int = 100, seed: int = 2) -> SuiteResult:
    """Zero blocks with y + z = n + 1 are found and force every immanant to vanish."""
    res = SuiteResult("zero-block")
    rng = random.Random(seed)
    for t in range(count):
        n = 1 + t % max_n
        M, _, _ = structured_zero_block_matrix(n, rng)
        w = vanishes_by_zero_block(M)
        res.checks += 1
        if w is None or w.y + w.z != n + 1 or any(M[i, j] != 0 for i in w.rows for j in w.cols):
            res.fail(kind="witness", rows=M.rows, witness=None if w is None else (w.rows, w.cols))
            continue
        for lam, v in immanants(M).items():
            res.checks += 1
            if v != 0:
                res.fail(kind="nonzero-immanant", rows=M.rows, lam=lam, value=v)
        # a dense matrix has a perfect matching on its support, hence no witness
        D = random_rational_matrix(n, rng)
        D = ExactMatrix([[x if x else 1 for x in row] for row in D.rows])
        res.checks += 1
        if vanishes_by_zero_block(D) is not None:
            res.fail(kind="spurious-witness", rows=D.rows)
    return res


# star degree ---------------------------------------------------------------------

STAR_SETTINGS = ((1, -1), (1, 1), (Fraction(1, 2), Fraction(1, 2)), (3, 2))


def _star_one(G: Graph, settings: List[Setting]) -> SuiteResult:
    res = SuiteResult("star-degree")
    s = star_degree(G)
    lams = enumerate_partitions(G.n)
    for b, g in settings:
        for lam, p in imm_polys(lincomb_matrix(G, b, g), lams).items():
            res.checks += 1
            mult = root_multiplicity(p, b)
            if mult < s:
                res.fail(graph=G, lam=lam, beta=b, gamma=g, multiplicity=mult, star_degree=s)
    return res


def suite_star_degree(max_n: int = 7, settings=STAR_SETTINGS, jobs: int = 1) -> SuiteResult:
    """Multiplicity of the root beta is at least the star degree, connected graphs."""
    graphs = list(atlas_graphs(max_n, connected=True))
    return _fan_out(partial(_star_one, settings=_settings(settings)), graphs, jobs, "star-degree")


# regular pairs ---------------------------------------------------------------------

REGULAR_SETTINGS = ((1, -1), (1, 1))


def suite_regular_equivalence(
    orders: Sequence[int] = (6, 8), ks: Sequence[int] = (2, 3), settings=REGULAR_SETTINGS
) -> SuiteResult:
    """Adjacency and linear-combination hook polynomials separate the same cubic pairs."""
    res = SuiteResult("regular-equivalence")
    for n in orders:
        graphs = cubic_graphs(n)
        for G, H in combinations(graphs, 2):
            for k in ks:
                for b, g in _settings(settings):
                    rep = regular_equivalence_check(G, H, k, b, g)
                    res.checks += 1
                    if not rep.holds:
                        res.fail(pair=(G, H), k=k, beta=b, gamma=g,
                                 adjacency_equal=rep.adjacency_equal, lincomb_equal=rep.lincomb_equal)
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "characters": suite_characters,
    "specializations": suite_specializations,
    "oracle-pair": suite_oracle_pair,
    "orientation-formula": suite_orientation_formula,
    "bounds": suite_bounds,
    "hook-closed-forms": suite_hook_closed_forms,
    "special-forms": suite_special_forms,
    "laplace": suite_laplace,
    "zero-block": suite_zero_block,
    "star-degree": suite_star_degree,
    "regular-equivalence": suite_regular_equivalence,
}
