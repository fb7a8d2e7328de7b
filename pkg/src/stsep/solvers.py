"""Oracle-model solvers and the brute-force reference."""
from fractions import Fraction
from itertools import combinations

import numpy as np

from .arrangement import face_connectivity_oracle
from .cover import build_cover_graph, strip_individual_separators
from .errors import NonUnitWeights, TooLarge, UnsupportedShape
from .geometry import Instance, Polyline, Segment
from .paths import (bfs_hops, integer_weights, seidel_apsp,  # noqa: F401
                    sssp_vertex_weighted, walk_back)
from .result import SeparatorResult, combine, ids_to_result


def _require_unit(instance):
    for ob in instance.obstacles:
        if ob.weight != 1:
            raise NonUnitWeights(f"obstacle {ob.id} has weight {ob.weight}")


def _cover_shortest(inst: Instance, tag: str, unit: bool) -> SeparatorResult:
    if not inst.obstacles:
        return SeparatorResult.infeasible(tag)
    g = build_cover_graph(inst)
    adj = g.sorted_adj()
    weight, _ = integer_weights(g.vertex_weights())
    best, best_path = None, None
    for i in sorted(g.ids):
        src, dst = (i, 0), (i, 1)
        if unit:
            dist, parent = bfs_hops(adj, src, dst)
        else:
            dist, parent = sssp_vertex_weighted(adj, weight, src, dst, best)
        d = dist.get(dst)
        if d is None or (best is not None and d >= best):
            continue
        best, best_path = d, walk_back(parent, dst)
    if best is None:
        return SeparatorResult.infeasible(tag)
    return ids_to_result([v[0] for v in best_path], g.weight, tag, best_path)


def solve_weighted(instance: Instance) -> SeparatorResult:
    """Cheapest (gamma, 0) -> (gamma, 1) path, or a lone separator if cheaper."""
    pre = strip_individual_separators(instance)
    return combine(pre.stripped, _cover_shortest(pre.remainder, "dijkstra", False))


def solve_unweighted_bfs(instance: Instance) -> SeparatorResult:
    _require_unit(instance)
    pre = strip_individual_separators(instance)
    return combine(pre.stripped, _cover_shortest(pre.remainder, "bfs", True))


def solve_unweighted_seidel(instance: Instance) -> SeparatorResult:
    """Unit-weight optimum read off the all-pairs hop matrix of the cover graph."""
    _require_unit(instance)
    tag = "seidel"
    pre = strip_individual_separators(instance)
    inst = pre.remainder
    if not inst.obstacles:
        return combine(pre.stripped, SeparatorResult.infeasible(tag))
    g = build_cover_graph(inst)
    verts = sorted(g.vertices)
    index = {v: k for k, v in enumerate(verts)}
    a = np.zeros((len(verts), len(verts)), dtype=bool)
    for u, v in g.edges():
        a[index[u], index[v]] = a[index[v], index[u]] = True
    D = seidel_apsp(a)
    best, src = None, None
    for i in sorted(g.ids):
        d = D[index[(i, 0)], index[(i, 1)]]
        if d >= 0 and (best is None or d < best):
            best, src = int(d), i
    if best is None:
        return combine(pre.stripped, SeparatorResult.infeasible(tag))
    # walk down the distance matrix towards (src, 1)
    adj = g.sorted_adj()
    goal = index[(src, 1)]
    path = [(src, 0)]
    while path[-1] != (src, 1):
        here = D[index[path[-1]], goal]
        path.append(next(v for v in adj[path[-1]] if D[index[v], goal] == here - 1))
    res = ids_to_result([v[0] for v in path], g.weight, tag, path)
    return combine(pre.stripped, res)


def brute_force_solve(instance: Instance, cap: int = 12) -> SeparatorResult:
    """Try subsets in order of weight; the first separating one is optimal."""
    tag = "brute-force"
    obs = list(instance.obstacles)
    for ob in obs:
        if not isinstance(ob.shape, (Segment, Polyline)):
            raise UnsupportedShape(f"obstacle {ob.id} is a {ob.kind}")
    if len(obs) > cap:
        raise TooLarge(f"{len(obs)} obstacles exceeds the cap of {cap}")
    s, t = instance.s, instance.t
    if not face_connectivity_oracle(obs, s, t):
        return SeparatorResult.infeasible(tag)
    subsets = []
    for r in range(1, len(obs) + 1):
        for combo in combinations(range(len(obs)), r):
            w = sum((obs[i].weight for i in combo), Fraction(0))
            subsets.append((w, r, [obs[i].id for i in combo], combo))
    subsets.sort(key=lambda x: (x[0], x[1], x[2]))
    for w, _, ids, combo in subsets:
        if face_connectivity_oracle([obs[i] for i in combo], s, t):
            return SeparatorResult(True, w, sorted(ids), tag)
    raise AssertionError("full set separates but no subset does")
