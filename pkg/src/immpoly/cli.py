"""Command-line front end.

Subcommands: ``poly``, ``coeff``, ``char``, ``census``, ``verify``, ``search``.
Exit codes: 0 success, 1 a verified identity failed, 2 usage or input
error, 3 tractability cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .graph6 import Graph6Error, emit_graph6, iter_graph6_file, parse_graph6
from .graphs import Graph, graph_matrix, parse_family
from .hooks import hook_coeff_closed
from .immanant import LIMITS, IntractableError, imm_poly
from .matrix import format_rational, parse_rational
from .orientations import CensusTooLarge, census, coeff_via_orientations
from .partitions import Partition, as_partition, character, hook
from .verify import SUITES, SuiteResult

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# input parsing ----------------------------------------------------------------

def iter_graphs(source: str) -> Iterator[Graph]:
    """Graphs named by ``g6:<str>``, ``family:<name>:<params>``, ``file:<path>`` or a bare path."""
    if source.startswith("g6:"):
        yield parse_graph6(source[3:])
    elif source.startswith("family:"):
        yield parse_family(source[len("family:"):])
    else:
        path = source[5:] if source.startswith("file:") else source
        if not os.path.exists(path):
            raise UsageError(f"no such graph file: {path}")
        yield from iter_graph6_file(path)


def parse_matrix_spec(spec: str, beta: Optional[Fraction], gamma: Optional[Fraction]) -> Tuple[str, Tuple[Fraction, ...]]:
    kind, _, rest = spec.partition(":")
    if kind in ("L", "Q", "A", "D"):
        if rest:
            raise UsageError(f"matrix {kind} takes no parameters")
        return kind, ()
    if kind == "Aalpha":
        if not rest:
            raise UsageError("Aalpha needs a value, e.g. Aalpha:1/3")
        return kind, (parse_rational(rest),)
    if kind == "lincomb":
        if rest:
            parts = rest.split(",")
            if len(parts) != 2:
                raise UsageError("lincomb takes beta,gamma")
            return kind, tuple(parse_rational(p) for p in parts)
        if beta is None or gamma is None:
            raise UsageError("lincomb needs beta,gamma after the colon or --beta/--gamma")
        return kind, (beta, gamma)
    raise UsageError(f"unknown matrix kind {kind!r}")


def lincomb_weights(kind: str, params: Tuple[Fraction, ...]) -> Tuple[Fraction, Fraction]:
    """(beta, gamma) with the named matrix equal to beta D + gamma A."""
    fixed = {"L": (1, -1), "Q": (1, 1), "A": (0, 1), "D": (1, 0)}
    if kind in fixed:
        return tuple(Fraction(x) for x in fixed[kind])  # type: ignore[return-value]
    if kind == "Aalpha":
        return params[0], 1 - params[0]
    return params[0], params[1]


def resolve_partition(spec: str, n: int) -> Partition:
    if spec.startswith("hook:"):
        try:
            k = int(spec[5:])
        except ValueError as exc:
            raise UsageError(f"bad hook spec {spec!r}") from exc
        if not 1 <= k <= n:
            raise UsageError(f"hook arm k={k} outside [1, {n}]")
        return hook(n, k)
    try:
        lam = as_partition(int(p) for p in spec.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad partition {spec!r}: {exc}") from exc
    if sum(lam) != n:
        raise UsageError(f"partition {lam} has weight {sum(lam)} but the graph has {n} vertices")
    return lam


def rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# output -----------------------------------------------------------------------

def _plain(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def emit(report: Dict[str, Any], fmt: str, rows: Sequence[Sequence[Any]], header: Sequence[str], out) -> None:
    """Write the report as JSON, or its ``rows`` as CSV / aligned text."""
    if fmt == "json":
        json.dump(_plain(report), out, indent=2)
        out.write("\n")
        return
    rows = [[_plain(x) if not isinstance(x, (list, tuple)) else " ".join(map(str, _plain(x))) for x in row]
            for row in rows]
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        for row in rows:
            out.write("  ".join(str(x) for x in row) + "\n")


# commands ---------------------------------------------------------------------

def _echo(args: argparse.Namespace, *names: str) -> Dict[str, Any]:
    return {k: getattr(args, k) for k in names if getattr(args, k, None) is not None}


def cmd_poly(args: argparse.Namespace, out) -> int:
    kind, params = parse_matrix_spec(args.matrix, args.beta, args.gamma)
    results, rows = [], []
    for G in iter_graphs(args.graph):
        lam = resolve_partition(args.partition, G.n)
        p = imm_poly(graph_matrix(G, kind, *params), lam)
        g6 = emit_graph6(G)
        results.append({"graph": g6, "n": G.n, "lambda": list(lam), "coeffs": list(p.coeffs)})
        rows.append([g6, lam, p.coeffs])
    report = {"command": "poly", "inputs": _echo(args, "graph", "matrix", "partition", "beta", "gamma"),
              "results": results}
    emit(report, args.format, rows, ["graph6", "lambda", "coeffs"], out)
    return EXIT_OK


def cmd_coeff(args: argparse.Namespace, out) -> int:
    kind, params = parse_matrix_spec(args.matrix, args.beta, args.gamma)
    weights = lincomb_weights(kind, params)
    results, rows = [], []
    for G in iter_graphs(args.graph):
        lam = resolve_partition(args.partition, G.n)
        if not 0 <= args.r <= G.n:
            raise UsageError(f"r={args.r} outside [0, {G.n}]")
        if args.method == "oracle":
            value = imm_poly(graph_matrix(G, kind, *params), lam).coeffs[args.r]
        elif args.method == "closed":
            if lam != hook(G.n, lam[0]):
                raise UsageError("closed forms cover hook partitions only")
            value = hook_coeff_closed(G, lam[0], args.r, *weights)
        else:
            value = coeff_via_orientations(G, lam, args.r, *weights)
        g6 = emit_graph6(G)
        results.append({"graph": g6, "lambda": list(lam), "r": args.r, "value": value})
        rows.append([g6, lam, args.r, value])
    report = {"command": "coeff",
              "inputs": _echo(args, "graph", "matrix", "partition", "r", "method", "beta", "gamma"),
              "results": results}
    emit(report, args.format, rows, ["graph6", "lambda", "r", "value"], out)
    return EXIT_OK


def cmd_char(args: argparse.Namespace, out) -> int:
    try:
        mu = as_partition(int(p) for p in args.cls.replace(",", " ").split())
    except ValueError as exc:
        raise UsageError(f"bad class {args.cls!r}: {exc}") from exc
    lam = resolve_partition(args.partition, sum(mu))
    value = character(lam, mu)
    report = {"command": "char", "inputs": {"partition": args.partition, "class": list(mu)},
              "lambda": list(lam), "value": value}
    emit(report, args.format, [[lam, mu, value]], ["lambda", "class", "value"], out)
    return EXIT_OK


def cmd_census(args: argparse.Namespace, out) -> int:
    results, rows = [], []
    for G in iter_graphs(args.graph):
        if not 0 <= args.r <= G.n:
            raise UsageError(f"r={args.r} outside [0, {G.n}]")
        cen = census(G, args.r)
        g6 = emit_graph6(G)
        counts = [{"type": list(nu), "count": cen[nu]} for nu in cen.types()]
        results.append({"graph": g6, "r": args.r, "counts": counts, "total": cen.total()})
        rows += [[g6, nu, cen[nu]] for nu in cen.types()]
    report = {"command": "census", "inputs": _echo(args, "graph", "r"), "results": results}
    emit(report, args.format, rows, ["graph6", "type", "count"], out)
    return EXIT_OK


_SIZE_ARG = {
    "characters": "max_n",
    "specializations": "max_n",
    "oracle-pair": "max_n",
    "orientation-formula": "max_n",
    "hook-closed-forms": "max_n",
    "special-forms": "max_n",
    "laplace": "max_n",
    "zero-block": "max_n",
    "star-degree": "max_n",
}
_PARALLEL = {"oracle-pair", "orientation-formula", "bounds", "hook-closed-forms", "star-degree"}
_WEIGHTED = {"orientation-formula", "bounds", "hook-closed-forms", "star-degree", "regular-equivalence"}


def run_suite(name: str, max_n: Optional[int], beta, gamma, jobs: int) -> SuiteResult:
    kwargs: Dict[str, Any] = {}
    if max_n is not None:
        if name == "bounds":
            kwargs.update(general_max_n=max_n, tree_max_n=max_n, bipartite_max_n=max_n)
        elif name == "hook-closed-forms":
            kwargs.update(max_n=max_n, include_7=False)
        elif name == "regular-equivalence":
            kwargs["orders"] = [n for n in (6, 8) if n <= max_n]
        else:
            kwargs[_SIZE_ARG[name]] = max_n
    if (beta is None) != (gamma is None):
        raise UsageError("--beta and --gamma go together")
    if beta is not None:
        if name not in _WEIGHTED:
            raise UsageError(f"suite {name} takes no beta/gamma")
        kwargs["settings"] = [(beta, gamma)]
    if name in _PARALLEL:
        kwargs["jobs"] = jobs
    return SUITES[name](**kwargs)


def cmd_verify(args: argparse.Namespace, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(n, args.max_n, args.beta, args.gamma, args.jobs) for n in names]
    report = {"command": "verify", "inputs": _echo(args, "suite", "max_n", "beta", "gamma", "jobs"),
              "suites": [r.to_dict() for r in results]}
    rows = [[r.name, "pass" if r.passed else "fail", r.checks, r.failure_count] for r in results]
    emit(report, args.format, rows, ["suite", "status", "checks", "failures"], out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def search_regular_pairs(
    path: str, n: int, d: int, k: int, beta: Fraction, gamma: Fraction
) -> Dict[str, Any]:
    """Bucket connected d-regular graphs on n vertices by hook polynomial of A.

    Every bucket must also be a bucket of the beta D + gamma A polynomial;
    ``consistent`` records this, and ``pairs`` lists non-isomorphic graphs
    sharing an adjacency bucket.
    """
    if (n * d) % 2:
        raise UsageError("n * d must be even")
    if not 1 <= k <= n:
        raise UsageError(f"hook arm k={k} outside [1, {n}]")
    if n > LIMITS.poly_max_n:
        raise IntractableError(f"order {n} exceeds the polynomial cap {LIMITS.poly_max_n}")
    if not os.path.exists(path):
        raise UsageError(f"no such graph file: {path}")
    lam = hook(n, k)
    graphs: List[Graph] = []
    ignored = 0
    for G in iter_graph6_file(path):
        if G.n == n and G.regular_degree() == d and G.is_connected():
            graphs.append(G)
        else:
            ignored += 1
    by_a: Dict[Tuple[Fraction, ...], List[int]] = {}
    by_l: Dict[Tuple[Fraction, ...], List[int]] = {}
    for i, G in enumerate(graphs):
        by_a.setdefault(imm_poly(graph_matrix(G, "A"), lam).coeffs, []).append(i)
        by_l.setdefault(imm_poly(graph_matrix(G, "lincomb", beta, gamma), lam).coeffs, []).append(i)
    buckets_a = sorted(by_a.values())
    buckets_l = sorted(by_l.values())
    pairs = []
    for bucket in buckets_a:
        for x in range(len(bucket)):
            for y in range(x + 1, len(bucket)):
                G, H = graphs[bucket[x]], graphs[bucket[y]]
                gx, hx = nx.Graph(G.edges), nx.Graph(H.edges)
                gx.add_nodes_from(range(n))
                hx.add_nodes_from(range(n))
                if not nx.is_isomorphic(gx, hx):
                    pairs.append([emit_graph6(G), emit_graph6(H)])
    return {
        "graphs": [emit_graph6(G) for G in graphs],
        "ignored": ignored,
        "buckets_adjacency": buckets_a,
        "buckets_lincomb": buckets_l,
        "consistent": buckets_a == buckets_l,
        "pairs": pairs,
    }


def cmd_search(args: argparse.Namespace, out) -> int:
    rep = search_regular_pairs(args.input, args.n, args.d, args.k, args.beta, args.gamma)
    report = {"command": "search", "inputs": _echo(args, "input", "n", "d", "k", "beta", "gamma"), **rep}
    rows = [[a, b] for a, b in rep["pairs"]]
    emit(report, args.format, rows, ["graph6_a", "graph6_b"], out)
    return EXIT_OK if rep["consistent"] else EXIT_FAIL


# parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="immpoly", description="Exact immanantal polynomials of graph matrices.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True) -> None:
        if graph:
            p.add_argument("--graph", required=True,
                           help="g6:<graph6>, family:<name>:<params>, or a graph6 file")
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    def weights(p: argparse.ArgumentParser) -> None:
        p.add_argument("--beta", type=rational_arg, help="exact rational p/q")
        p.add_argument("--gamma", type=rational_arg, help="exact rational p/q")

    p = sub.add_parser("poly", help="coefficients c_0..c_n of Imm_lam(xI - M)")
    common(p)
    p.add_argument("--matrix", default="L", help="L, Q, A, D, Aalpha:<a> or lincomb[:b,g]")
    p.add_argument("--partition", required=True, help="hook:<k> or parts such as 3,1,1")
    weights(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coeff", help="a single coefficient c_r")
    common(p)
    p.add_argument("--matrix", default="L")
    p.add_argument("--partition", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=("oracle", "closed", "orientations"), default="oracle")
    weights(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("char", help="irreducible character value chi_lam(mu)")
    common(p, graph=False)
    p.add_argument("--partition", required=True)
    p.add_argument("--class", dest="cls", required=True, help="cycle type, e.g. 2,1,1")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("census", help="vertex-orientation counts by type")
    common(p)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    common(p, graph=False)
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    weights(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="bucket regular graphs by hook polynomial")
    common(p, graph=False)
    p.add_argument("--input", required=True, help="graph6 file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--beta", type=rational_arg, default=Fraction(1))
    p.add_argument("--gamma", type=rational_arg, default=Fraction(-1))
    p.set_defaults(func=cmd_search)
    return ap


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (IntractableError, CensusTooLarge) as exc:
        print(f"immpoly: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, Graph6Error, ValueError) as exc:
        print(f"immpoly: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Sequence[str]) -> Tuple[int, str]:
    """Run the CLI in-process and capture stdout; handy for tests."""
    buf = io.StringIO()
    try:
        code = main(argv, buf)
    except SystemExit as exc:  # argparse usage errors
        code = int(exc.code or 0)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
