"""Shortest-path engines on vertex-weighted graphs.

Graphs are adjacency maps node -> iterable of nodes.  Nodes must be mutually
orderable (tuples of ints work) so ties resolve the same way on every run.
A path pays the weight of every vertex it enters; the source is free.
"""
from collections import deque
from fractions import Fraction
from heapq import heappop, heappush
from math import gcd

import numpy as np


def sssp_vertex_weighted(adj, weight, source, target=None, bound=None):
    """Dijkstra under the enter-cost convention.

    Returns (dist, parent).  Stops early once target is settled, or once the
    frontier reaches bound (so every distance < bound is still exact).
    Among equally short paths the smallest predecessor is kept.
    """
    dist = {source: 0}
    parent = {source: None}
    done = set()
    heap = [(0, source)]
    while heap:
        d, u = heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == target:
            break
        if bound is not None and d >= bound:
            break
        for v in adj.get(u, ()):
            if v in done:
                continue
            nd = d + weight[v]
            old = dist.get(v)
            if old is None or nd < old:
                dist[v] = nd
                parent[v] = u
                heappush(heap, (nd, v))
            elif nd == old and u < parent[v]:
                parent[v] = u
    return dist, parent


def integer_weights(weight: dict):
    """Scale rational weights to integers; returns (scaled, denominator)."""
    den = 1
    for w in weight.values():
        d = Fraction(w).denominator
        den = den * d // gcd(den, d)
    return {k: int(Fraction(w) * den) for k, w in weight.items()}, den


def bfs_hops(adj, source, target=None):
    """Unweighted distances (edges entered) and parents."""
    dist = {source: 0}
    parent = {source: None}
    q = deque([source])
    while q:
        u = q.popleft()
        if u == target:
            break
        for v in adj.get(u, ()):
            if v not in dist:
                dist[v] = dist[u] + 1
                parent[v] = u
                q.append(v)
    return dist, parent


def walk_back(parent, v):
    path = []
    while v is not None:
        path.append(v)
        v = parent[v]
    return path[::-1]


def bool_product(a, b):
    """Boolean matrix product of two 0/1 matrices."""
    return (a.astype(np.int64) @ b.astype(np.int64)) > 0


def _seidel(a):
    n = a.shape[0]
    eye = np.eye(n, dtype=bool)
    if np.all(a | eye):
        return a.astype(np.int64)
    z = bool_product(a, a)
    b = (a | z) & ~eye
    t = _seidel(b)
    x = t @ a.astype(np.int64)
    deg = a.sum(axis=1).astype(np.int64)
    return np.where(x >= t * deg[None, :], 2 * t, 2 * t - 1)


def _components(a):
    n = a.shape[0]
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for v in np.flatnonzero(a[u]):
                if comp[v] < 0:
                    comp[v] = c
                    stack.append(v)
        c += 1
    return comp, c


def seidel_apsp(adjacency):
    """Hop distances of an undirected graph given as a square 0/1 matrix.

    Unreachable pairs get -1.  Each connected component is solved separately.
    """
    a = np.asarray(adjacency, dtype=bool).copy()
    n = a.shape[0]
    np.fill_diagonal(a, False)
    a = a | a.T
    out = np.full((n, n), -1, dtype=np.int64)
    comp, count = _components(a)
    comp = np.asarray(comp, dtype=np.int64)
    for c in range(count):
        idx = np.flatnonzero(comp == c)
        if len(idx) == 1:
            out[idx[0], idx[0]] = 0
            continue
        sub = a[np.ix_(idx, idx)]
        out[np.ix_(idx, idx)] = _seidel(sub)
    return out
