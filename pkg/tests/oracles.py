"""Slow, obviously-correct reference computations used only by the tests.

None of these touch the package's fast paths: they work from plain edge
lists and nested Python loops.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np


def edge_set(g) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edge_indices()}


def adjacency_lists(g) -> list[set[int]]:
    adj = [set() for _ in range(g.n_composite)]
    for a, b in g.edge_indices():
        adj[a].add(b)
        adj[b].add(a)
    return adj


def floyd_warshall_diameter(g) -> float:
    n = g.n_composite
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for a, b in g.edge_indices():
        d[a][b] = d[b][a] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return max(max(row) for row in d)


def brute_force_automorphisms(n: int, edges: set[frozenset[int]]) -> list[tuple[int, ...]]:
    """Every permutation of range(n) preserving the edge set (vectorized over permutations)."""
    adj = np.zeros((n, n), dtype=bool)
    for e in edges:
        a, b = tuple(e)
        adj[a, b] = adj[b, a] = True
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    images = adj[perms[:, :, None], perms[:, None, :]]
    keep = (images == adj[None]).all(axis=(1, 2))
    return [tuple(p) for p in perms[keep].tolist()]


def brute_force_rigid(g) -> bool:
    return len(brute_force_automorphisms(g.n_composite, edge_set(g))) == 1


def common_neighbors_by_enumeration(g, a: int, b: int) -> int:
    edges = edge_set(g)
    return sum(
        1 for w in range(g.n_composite)
        if w not in (a, b) and frozenset((a, w)) in edges and frozenset((w, b)) in edges
    )


def noncontiguous_pairs_by_enumeration(sig, h: int) -> tuple[int, int]:
    """(# composite pairs whose aspect-h gap is >= 2, total pairs), looping over tuples."""
    verts = list(itertools.product(*[range(t) for t in sig.aspect_sizes]))
    nc = total = 0
    for x, y in itertools.combinations(verts, 2):
        total += 1
        nc += abs(x[h - 1] - y[h - 1]) >= 2
    return nc, total


def noncontiguous_pair_fraction(n_vertices: int, n_times: int) -> float:
    """Closed-form share of TVG pairs with time gap >= 2."""
    return n_vertices**2 * (comb(n_times, 2) - (n_times - 1)) / comb(n_vertices * n_times, 2)


def witness_edges_by_paths(g, u: int, v: int, coord) -> set[frozenset[int]]:
    """All noncontiguous edges lying on some path of length <= 2 from u to v."""
    edges = edge_set(g)
    found = set()
    candidates = []
    if frozenset((u, v)) in edges:
        candidates.append(frozenset((u, v)))
    for w in range(g.n_composite):
        if w in (u, v):
            continue
        if frozenset((u, w)) in edges and frozenset((w, v)) in edges:
            candidates += [frozenset((u, w)), frozenset((w, v))]
    for e in candidates:
        a, b = tuple(e)
        if abs(coord(a) - coord(b)) >= 2:
            found.add(e)
    return found
