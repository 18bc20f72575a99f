"""Write graph6 files of the connected cubic graphs on a given number of vertices.

Labelled cubic graphs are enumerated by backtracking (vertex 0 first fills its
degree, then vertex 1, ...) and reduced up to isomorphism with networkx.

    python3 scripts/generate_cubic.py 6 src/immpoly/data/cubic_6.g6
"""

import argparse
import sys

import networkx as nx

from immpoly.graph6 import emit_graph6
from immpoly.graphs import Graph


def labelled_regular(n, d):
    deg = [0] * n
    edges = []

    def fill(v):
        if v == n:
            yield list(edges)
            return
        if deg[v] == d:
            yield from fill(v + 1)
            return
        lo = edges[-1][1] + 1 if edges and edges[-1][0] == v else v + 1
        for w in range(lo, n):
            if deg[w] < d:
                deg[v] += 1
                deg[w] += 1
                edges.append((v, w))
                yield from fill(v)
                edges.pop()
                deg[v] -= 1
                deg[w] -= 1

    yield from fill(0)


def connected_regular_classes(n, d):
    reps = {}
    for edges in labelled_regular(n, d):
        g = nx.Graph(edges)
        if g.number_of_nodes() != n or not nx.is_connected(g):
            continue
        key = nx.weisfeiler_lehman_graph_hash(g)
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
    out = [h for bucket in reps.values() for h in bucket]
    return sorted((Graph.from_edges(n, h.edges()) for h in out), key=emit_graph6)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int)
    ap.add_argument("out")
    ap.add_argument("--degree", type=int, default=3)
    args = ap.parse_args(argv)
    graphs = connected_regular_classes(args.n, args.degree)
    with open(args.out, "w") as fh:
        fh.write(f"# connected {args.degree}-regular graphs on {args.n} vertices\n")
        for G in graphs:
            fh.write(emit_graph6(G) + "\n")
    print(f"{len(graphs)} graphs -> {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
