"""Point-separation instances built from directed graphs, plus the k-walk DP.

Layout: vertex v sits in column x = v + 1, rows are y = 1..k+1.  An edge
u -> v of weight w becomes, in every layer r = 1..k, an obstacle of weight w
from (x_u, r) to (x_v, r + 1).  A vertex that can lie on a closed walk gets a
rectilinear chain of k + 6 unit pieces of weight W that leaves its column at
the top, runs around the left of s and comes back at the bottom.  A closed
k-walk through v plus the chain of v is a loop around s.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import SelfLoop
from .geometry import Instance, Obstacle, P, Point, Polyline, Segment, obstacles_intersect

VARIANTS = ("segments", "polyline2", "rect3")


@dataclass
class DirectedGraph:
    n: int
    edges: list  # (u, v, weight)

    def __post_init__(self):
        self.edges = [(int(u), int(v), Fraction(w)) for u, v, w in self.edges]
        for u, v, w in self.edges:
            if w <= 0:
                raise ValueError("edge weights must be positive")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}->{v} out of range")

    @property
    def W(self) -> Fraction:
        return max((w for _, _, w in self.edges), default=Fraction(0))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass
class ReductionOutput:
    instance: Instance
    variant: str
    k: int
    m: int
    W: Fraction
    offset: Fraction
    column_x: dict
    edge_obstacles: list = field(default_factory=list)
    chain_obstacles: dict = field(default_factory=dict)

    def meta(self) -> dict:
        return {"variant": self.variant, "k": self.k, "m": self.m,
                "W": str(self.W), "offset": str(self.offset),
                "column_x": {str(v): str(x) for v, x in self.column_x.items()}}


def min_weight_k_walk(G: DirectedGraph, k: int):
    """Minimum weight of a closed walk with exactly k edges, or None."""
    if k < 1:
        raise ValueError("k must be positive")
    best = None
    out = [[] for _ in range(G.n)]
    for u, v, w in G.edges:
        out[u].append((v, w))
    for start in range(G.n):
        layer = {start: Fraction(0)}
        for _ in range(k):
            nxt = {}
            for u, d in layer.items():
                for v, w in out[u]:
                    if v not in nxt or d + w < nxt[v]:
                        nxt[v] = d + w
            layer = nxt
        if start in layer and (best is None or layer[start] < best):
            best = layer[start]
    return best


def _edge_shape(variant, xu, xv, r, n, idx, m):
    a, b = P(xu, r), P(xv, r + 1)
    if variant == "segments":
        return Segment(a, b)
    if variant == "polyline2":
        bend = P(Fraction(n + 1, 2), Fraction(2 * r + 1, 2))
        return Polyline((a, bend, b))
    h = Fraction(idx + 1, m + 1)
    return Polyline((a, P(xu, r + h), P(xv, r + h), b))


def _chain_points(x, k):
    """Corner points of the chain of column x, left side split into k + 2 pieces."""
    top = k + 1 + x
    bot = 1 - x
    pts = [P(x, k + 1), P(x, top), P(-x, top)]
    for i in range(1, k + 2):
        pts.append(P(-x, top - Fraction(i * (top - bot), k + 2)))
    pts += [P(-x, bot), P(x, bot), P(x, 1)]
    return pts


def generate_reduction(G: DirectedGraph, k: int, variant: str = "segments") -> ReductionOutput:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if k < 1:
        raise ValueError("k must be positive")
    for u, v, _ in G.edges:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
    n, m, W = G.n, G.m, G.W
    col = {v: Fraction(v + 1) for v in range(n)}
    obs = []
    edge_obs = []
    for r in range(1, k + 1):
        for idx, (u, v, w) in enumerate(G.edges):
            ob = Obstacle(len(obs), w, _edge_shape(variant, col[u], col[v], r, n, idx, m))
            obs.append(ob)
            edge_obs.append((r, idx, ob.id))
    has_in = {v for _, v, _ in G.edges}
    has_out = {u for u, _, _ in G.edges}
    chains = {}
    for v in sorted(has_in & has_out):
        pts = _chain_points(col[v], k)
        ids = []
        for i in range(len(pts) - 1):
            ob = Obstacle(len(obs), W, Segment(pts[i], pts[i + 1]))
            obs.append(ob)
            ids.append(ob.id)
        chains[v] = ids
    y = Fraction(k + 2, 2) + Fraction(1, 7)
    s, t = Point(Fraction(1, 2), y), Point(Fraction(n + 1), y)
    inst = Instance(tuple(obs), s, t)
    return ReductionOutput(inst, variant, k, m, W, (k + 6) * W, col, edge_obs, chains)


def expected_obstacle_count(G: DirectedGraph, k: int) -> int:
    """k edge obstacles per edge, k + 6 chain pieces per vertex with in- and out-edges."""
    c = len({v for _, v, _ in G.edges} & {u for u, _, _ in G.edges})
    return k * G.m + c * (k + 6)


def stated_obstacle_count(k: int, m: int) -> int:
    return 2 * k * m + 6 * m


def intersection_budget(k: int, m: int) -> int:
    return k + 2 * (k + 1) * m + 4 * m


def unique_intersection_points(instance: Instance) -> int:
    """Distinct representative intersection points over all obstacle pairs."""
    obs = instance.obstacles
    pts = set()
    for i in range(len(obs)):
        for j in range(i + 1, len(obs)):
            for rep in obstacles_intersect(obs[i], obs[j]):
                pts.add(rep.point)
    return len(pts)


def verify_reduction(out: ReductionOutput, G: DirectedGraph, solver) -> dict:
    """Compare a solver's optimum with the k-walk DP through the offset formula."""
    dp = min_weight_k_walk(G, out.k)
    res = solver(out.instance)
    got = res.weight if res.feasible else None
    limit = out.k * out.W
    if dp is not None and dp <= limit:
        expected = dp + out.offset
        ok = got == expected
    else:
        expected = None
        ok = got is None or got > limit + out.offset
    return {"dp": dp, "solver": got, "expected": expected, "offset": out.offset,
            "threshold": limit + out.offset, "ok": ok}
