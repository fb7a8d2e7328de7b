"""Arrangements of segment and polyline obstacles, and the solver built on them.

The plane graph is a half-edge structure.  Half-edge h runs from
edges[h >> 1][h & 1] to the other endpoint and its twin is h ^ 1.  Faces lie to
the left of their half-edges, so bounded face boundaries have positive area.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

from .errors import (DisconnectedObstacleSubgraph, PointOnSkeleton,
                     UnsupportedShape)
from .geometry import (Point, Polyline, Segment, _seg_seg, canonical_point,
                       chain_points, crosses_shifted, on_segment)
from .paths import integer_weights, sssp_vertex_weighted, walk_back
from .result import SeparatorResult, ids_to_result


@dataclass
class Face:
    id: int
    cycles: list            # boundary walks, lists of half-edge ids
    area: Optional[Fraction]  # area of the outer walk; None for the unbounded face


@dataclass
class PlaneGraph:
    vertices: list
    edges: list
    out: list
    nxt: list
    half_face: list
    faces: list
    components: int
    s_face: Optional[int] = None
    t_face: Optional[int] = None

    def origin(self, h):
        return self.edges[h >> 1][h & 1]

    def dest(self, h):
        return self.edges[h >> 1][1 - (h & 1)]

    def euler_ok(self) -> bool:
        V, E, F = len(self.vertices), len(self.edges), len(self.faces)
        return V - E + F == 1 + self.components


@dataclass
class ObstacleSubgraphs:
    edges: dict       # obstacle id -> list of edge ids
    vertices: dict    # obstacle id -> sorted list of vertex ids
    canonical: dict   # obstacle id -> vertex id


@dataclass
class DualPath:
    faces: Optional[list]
    crossed: frozenset

    @property
    def empty(self) -> bool:
        return self.faces is not None and len(self.faces) < 2


@dataclass
class ArrangementCover:
    adj: dict


@dataclass
class AuxiliaryGraph:
    ids: list
    weight: dict
    vertex_nbrs: dict = field(default_factory=dict)    # (vid, b) -> set of (oid, b)
    obstacle_nbrs: dict = field(default_factory=dict)  # (oid, b) -> set of (vid, b)
    parities: dict = field(default_factory=dict)       # oid -> {vid: set of parities}
    self_separating: set = field(default_factory=set)


# ------------------------------------------------------------ plane graph

def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(d1, d2) -> int:
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return h1 - h2
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _area2(pts) -> Fraction:
    n = len(pts)
    return sum((pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1]
                for i in range(n)), Fraction(0))


def _inside_walk(q, pts) -> bool:
    """Even-odd test of q against a closed walk; q must not lie on it."""
    inside = False
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if (a[1] > q[1]) != (b[1] > q[1]):
            x = a[0] + (q[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if q[0] < x:
                inside = not inside
    return inside


def plane_graph(vertices, edges, s=None, t=None) -> PlaneGraph:
    """Half-edge structure of a straight-line drawing.

    Edges must not cross or overlap except at shared endpoints.
    """
    vertices = [Point(*v) for v in vertices]
    n = len(vertices)
    out = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        out[u].append(2 * e)
        out[v].append(2 * e + 1)

    def direction(h):
        u, v = edges[h >> 1][h & 1], edges[h >> 1][1 - (h & 1)]
        return (vertices[v][0] - vertices[u][0], vertices[v][1] - vertices[u][1])

    pos = {}
    for v in range(n):
        out[v].sort(key=cmp_to_key(lambda a, b: _angle_cmp(direction(a), direction(b))))
        for k, h in enumerate(out[v]):
            pos[h] = k
    nh = 2 * len(edges)
    nxt = [0] * nh
    for h in range(nh):
        tw = h ^ 1
        v = edges[h >> 1][1 - (h & 1)]
        nxt[h] = out[v][pos[tw] - 1]

    # components
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comp = [find(v) for v in range(n)]
    ncomp = len(set(comp))

    # boundary walks
    seen = [False] * nh
    walks = []
    for h in range(nh):
        if seen[h]:
            continue
        cyc = []
        g = h
        while not seen[g]:
            seen[g] = True
            cyc.append(g)
            g = nxt[g]
        pts = [vertices[edges[g >> 1][g & 1]] for g in cyc]
        walks.append((cyc, pts, _area2(pts)))

    faces = [Face(0, [], None)]
    half_face = [0] * nh
    bounded = []
    for cyc, pts, a2 in walks:
        if a2 > 0:
            f = Face(len(faces), [cyc], a2 / 2)
            faces.append(f)
            bounded.append((f, pts, comp[edges[cyc[0] >> 1][0]]))
            for g in cyc:
                half_face[g] = f.id
    for cyc, pts, a2 in walks:
        if a2 > 0:
            continue
        c = comp[edges[cyc[0] >> 1][0]]
        q = pts[0]
        host = faces[0]
        for f, fpts, fc in bounded:
            if fc != c and (host.area is None or f.area < host.area) and _inside_walk(q, fpts):
                host = f
        host.cycles.append(cyc)
        for g in cyc:
            half_face[g] = host.id

    pg = PlaneGraph(vertices, [tuple(e) for e in edges], out, nxt, half_face,
                    faces, ncomp)
    if s is not None:
        pg.s_face = s if isinstance(s, int) else locate_face(pg, s)
    if t is not None:
        pg.t_face = t if isinstance(t, int) else locate_face(pg, t)
    return pg


def locate_face(pg: PlaneGraph, p) -> int:
    """Face containing p, by crossing counts against bounded face boundaries."""
    for u, v in pg.edges:
        if on_segment(p, pg.vertices[u], pg.vertices[v]):
            raise PointOnSkeleton(f"{p} lies on the arrangement")
    for q in pg.vertices:
        if q == p:
            raise PointOnSkeleton(f"{p} lies on the arrangement")
    best = None
    for f in pg.faces[1:]:
        if best is not None and f.area >= best.area:
            continue
        cyc = f.cycles[0]
        pts = [pg.vertices[pg.origin(g)] for g in cyc]
        if _inside_walk(p, pts):
            best = f
    return 0 if best is None else best.id


# ----------------------------------------------------------- arrangement

def _prim_boxes(prims):
    return [(min(a[0], b[0]), min(a[1], b[1]), max(a[0], b[0]), max(a[1], b[1]))
            for a, b, _ in prims]


def _overlapping_pairs(boxes):
    order = sorted(range(len(boxes)), key=lambda i: boxes[i][0])
    active = []
    for i in order:
        x0, y0, x1, y1 = boxes[i]
        active = [j for j in active if boxes[j][2] >= x0]
        for j in active:
            b = boxes[j]
            if b[1] <= y1 and y0 <= b[3]:
                yield j, i
        active.append(i)


def build_arrangement(obstacles, s=None, t=None):
    """Plane graph of the union of segment/polyline obstacles plus their subgraphs."""
    prims = []
    for ob in obstacles:
        if not isinstance(ob.shape, (Segment, Polyline)):
            raise UnsupportedShape(f"obstacle {ob.id} is a {ob.kind}")
        pts = chain_points(ob.shape)
        for i in range(len(pts) - 1):
            prims.append((pts[i], pts[i + 1], ob.id))
    splits = [{a, b} for a, b, _ in prims]
    for i, j in _overlapping_pairs(_prim_boxes(prims)):
        for rep in _seg_seg(prims[i][0], prims[i][1], prims[j][0], prims[j][1]):
            splits[i].add(rep.point)
            splits[j].add(rep.point)

    vid = {}
    verts = []

    def vertex(p):
        k = vid.get(p)
        if k is None:
            k = vid[p] = len(verts)
            verts.append(p)
        return k

    owners = {}
    for (a, b, oid), pts in zip(prims, splits):
        k = 0 if a[0] != b[0] else 1
        chain = sorted(pts, key=lambda q: q[k], reverse=a[k] > b[k])
        for x in range(len(chain) - 1):
            u, v = vertex(chain[x]), vertex(chain[x + 1])
            key = (min(u, v), max(u, v))
            owners.setdefault(key, set()).add(oid)
    for ob in obstacles:
        vertex(canonical_point(ob))

    edge_list = sorted(owners)
    pg = plane_graph(verts, edge_list, s, t)
    sub_e = {ob.id: [] for ob in obstacles}
    sub_v = {ob.id: set() for ob in obstacles}
    for e, key in enumerate(edge_list):
        for oid in owners[key]:
            sub_e[oid].append(e)
            sub_v[oid].update(key)
    sigma = ObstacleSubgraphs(
        sub_e, {k: sorted(v) for k, v in sub_v.items()},
        {ob.id: vid[canonical_point(ob)] for ob in obstacles})
    return pg, sigma


def subgraphs_from_vertex_sets(pg: PlaneGraph, vertex_sets: dict,
                               edge_sets: Optional[dict] = None) -> ObstacleSubgraphs:
    """Obstacle subgraphs given by vertex ids (edges induced unless listed)."""
    edges, verts, canon = {}, {}, {}
    for oid, vs in vertex_sets.items():
        vs = sorted(set(vs))
        if edge_sets is not None and oid in edge_sets:
            es = sorted(edge_sets[oid])
        else:
            inside = set(vs)
            es = [e for e, (u, v) in enumerate(pg.edges) if u in inside and v in inside]
        edges[oid] = es
        verts[oid] = vs
        canon[oid] = max(vs, key=lambda v: (pg.vertices[v][1], pg.vertices[v][0]))
    return ObstacleSubgraphs(edges, verts, canon)


# ------------------------------------------------------ dual and covers

def dual_path(pg: PlaneGraph) -> DualPath:
    """Breadth-first simple path of faces from the s-face to the t-face."""
    src, dst = pg.s_face, pg.t_face
    if src == dst:
        return DualPath([src], frozenset())
    adj = {}
    for e in range(len(pg.edges)):
        f1, f2 = pg.half_face[2 * e], pg.half_face[2 * e + 1]
        if f1 != f2:
            adj.setdefault(f1, []).append((f2, e))
            adj.setdefault(f2, []).append((f1, e))
    prev = {src: None}
    q = deque([src])
    while q:
        f = q.popleft()
        if f == dst:
            break
        for g, e in adj.get(f, ()):
            if g not in prev:
                prev[g] = (f, e)
                q.append(g)
    if dst not in prev:
        raise ValueError("dual graph is disconnected")
    faces, crossed = [dst], []
    f = dst
    while prev[f] is not None:
        f, e = prev[f]
        faces.append(f)
        crossed.append(e)
    return DualPath(faces[::-1], frozenset(crossed))


def reference_cut(pg: PlaneGraph, pi) -> DualPath:
    """Edges crossed an odd number of times by the (shifted) reference path."""
    crossed = set()
    for e, (u, v) in enumerate(pg.edges):
        a, b = pg.vertices[u], pg.vertices[v]
        par = 0
        for j in range(len(pi) - 1):
            if crosses_shifted(a, b, pi[j], pi[j + 1]):
                par ^= 1
        if par:
            crossed.add(e)
    return DualPath(None, frozenset(crossed))


def build_homology_cover(pg: PlaneGraph, dual: DualPath) -> ArrangementCover:
    adj = {(v, b): [] for v in range(len(pg.vertices)) for b in (0, 1)}
    for e, (u, v) in enumerate(pg.edges):
        x = 1 if e in dual.crossed else 0
        for b in (0, 1):
            adj[(u, b)].append((v, b ^ x))
            adj[(v, b ^ x)].append((u, b))
    return ArrangementCover(adj)


def _parity_labels(pg, sigma, oid, crossed):
    nbr = {}
    for e in sigma.edges[oid]:
        u, v = pg.edges[e]
        x = 1 if e in crossed else 0
        nbr.setdefault(u, []).append((v, x))
        nbr.setdefault(v, []).append((u, x))
    root = sigma.canonical[oid]
    seen = {(root, 0)}
    q = deque([(root, 0)])
    while q:
        u, p = q.popleft()
        for v, x in nbr.get(u, ()):
            st = (v, p ^ x)
            if st not in seen:
                seen.add(st)
                q.append(st)
    labels = {}
    for v, p in seen:
        labels.setdefault(v, set()).add(p)
    if set(labels) != set(sigma.vertices[oid]) | {root}:
        raise DisconnectedObstacleSubgraph(f"obstacle {oid} is not connected")
    return labels


def build_auxiliary_graph(pg: PlaneGraph, sigma: ObstacleSubgraphs,
                          dual: DualPath, weights: dict) -> AuxiliaryGraph:
    ids = sorted(sigma.edges)
    H = AuxiliaryGraph(ids, {i: weights[i] for i in ids})
    for oid in ids:
        labels = _parity_labels(pg, sigma, oid, dual.crossed)
        H.parities[oid] = labels
        if any(len(p) == 2 for p in labels.values()):
            H.self_separating.add(oid)
        for bo in (0, 1):
            H.obstacle_nbrs[(oid, bo)] = set()
        for v, pars in labels.items():
            for bo in (0, 1):
                for p in pars:
                    vb = (v, bo ^ p)
                    H.obstacle_nbrs[(oid, bo)].add(vb)
                    H.vertex_nbrs.setdefault(vb, set()).add((oid, bo))
    return H


# --------------------------------------------------------------- solving

def _h_adjacency(H, live):
    """H restricted to live obstacles; nodes (0, oid, b) and (1, vid, b)."""
    adj = {}
    weight = {}
    for (oid, bo), vs in H.obstacle_nbrs.items():
        if oid not in live:
            continue
        o = (0, oid, bo)
        weight[o] = H.weight[oid]
        adj.setdefault(o, [])
        for v, b in vs:
            x = (1, v, b)
            weight[x] = 0
            adj[o].append(x)
            adj.setdefault(x, []).append(o)
    for k in adj:
        adj[k].sort()
    return adj, weight


def solve_arrangement(pg: PlaneGraph, sigma: ObstacleSubgraphs, weights: dict,
                      dual: Optional[DualPath] = None) -> SeparatorResult:
    """Minimum-weight separating subset in the arrangement model."""
    tag = "arrangement"
    if not sigma.edges and not sigma.vertices:
        return SeparatorResult.infeasible(tag)
    if pg.s_face == pg.t_face:
        return SeparatorResult.infeasible(tag)
    if dual is None:
        dual = dual_path(pg)
    H = build_auxiliary_graph(pg, sigma, dual, weights)
    best_w, best_ids, best_path = None, None, None
    for oid in sorted(H.self_separating, key=lambda i: (H.weight[i], i)):
        best_w, best_ids = Fraction(H.weight[oid]), [oid]
        break
    live = set(H.ids) - H.self_separating
    adj, weight = _h_adjacency(H, live)
    weight, den = integer_weights(weight)
    if best_w is not None:
        best_w = best_w * den
    vert_ids = sorted({k[1] for k in adj if k[0] == 1 and k[2] == 0})
    use_obstacles = len(live) <= len(vert_ids)
    sources = sorted(live) if use_obstacles else vert_ids
    kind = 0 if use_obstacles else 1
    for x in sources:
        src, dst = (kind, x, 0), (kind, x, 1)
        if src not in adj or dst not in adj:
            continue
        dist, parent = sssp_vertex_weighted(adj, weight, src, dst, best_w)
        d = dist.get(dst)
        if d is None or (best_w is not None and d >= best_w):
            continue
        if dst not in parent:
            continue
        path = walk_back(parent, dst)
        best_w, best_path = d, path
        best_ids = sorted({n[1] for n in path if n[0] == 0})
    if best_w is None:
        return SeparatorResult.infeasible(tag)
    res = ids_to_result(best_ids, H.weight, tag, best_path)
    return res


def solve_arrangement_instance(instance) -> SeparatorResult:
    """Build the arrangement of an instance and solve it there."""
    if not instance.obstacles:
        return SeparatorResult.infeasible("arrangement")
    pg, sigma = build_arrangement(instance.obstacles, instance.s, instance.t)
    return solve_arrangement(pg, sigma, {ob.id: ob.weight for ob in instance.obstacles})


def face_connectivity_oracle(obstacles, s, t) -> bool:
    """True iff the union of the given obstacles separates s from t."""
    obstacles = list(obstacles)
    if not obstacles:
        return False
    pg, _ = build_arrangement(obstacles, s, t)
    return pg.s_face != pg.t_face
