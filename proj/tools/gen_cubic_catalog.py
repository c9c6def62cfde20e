#!/usr/bin/env python3
"""Generate the catalog of connected bridgeless simple cubic graphs on n <= 14
vertices as graph6 files (one per order).

Graphs are produced by edge insertion from the previous order plus random
pairing-model samples, deduplicated by nauty canonical certificates, until the
number of connected cubic graphs matches the known counts (OEIS A002851).
"""
import argparse
import random
import sys

import networkx as nx
import pynauty

CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical_graph(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in g.nodes}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    inv = {old: new for new, old in enumerate(lab)}
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from((inv[u], inv[v]) for u, v in g.edges)
    return h


def edge_insertions(g):
    n = g.number_of_nodes()
    edges = list(g.edges)
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            h = g.copy()
            x, y = n, n + 1
            h.remove_edge(a, b)
            h.remove_edge(c, d)
            h.add_edges_from([(a, x), (x, b), (c, y), (y, d), (x, y)])
            yield h


def random_cubic(n, rng):
    while True:
        points = [v for v in range(n) for _ in range(3)]
        rng.shuffle(points)
        g = nx.Graph()
        g.add_nodes_from(range(n))
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or g.has_edge(u, v):
                ok = False
                break
            g.add_edge(u, v)
        if ok:
            return g


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--out", default="tests/data")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    prev = {certificate(nx.complete_graph(4)): nx.complete_graph(4)}
    levels = {4: prev}
    for n in range(6, args.max_n + 1, 2):
        found = {}
        for g in prev.values():
            for h in edge_insertions(g):
                found.setdefault(certificate(h), h)
        samples = 0
        while len(found) < CONNECTED_CUBIC[n]:
            g = random_cubic(n, rng)
            samples += 1
            if nx.is_connected(g):
                found.setdefault(certificate(g), g)
        print(f"n={n}: {len(found)} connected cubic ({samples} random samples)",
              file=sys.stderr)
        levels[n] = found
        prev = found

    for n, graphs in levels.items():
        rows = []
        for g in graphs.values():
            if nx.has_bridges(g):
                continue
            rows.append(nx.to_graph6_bytes(canonical_graph(g), header=False)
                        .decode().strip())
        rows.sort()
        with open(f"{args.out}/cubic_bridgeless_n{n:02d}.g6", "w") as f:
            f.write("\n".join(rows) + "\n")
        print(f"n={n}: {len(rows)} bridgeless", file=sys.stderr)


if __name__ == "__main__":
    main()
