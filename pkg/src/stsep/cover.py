"""The intersection graph in the homology cover.

Every obstacle gamma lifts to two copies (gamma, 0) and (gamma, 1); bit 0 is
the copy whose canonical point lies on the "+" sheet.  Two copies are adjacent
when some intersection point of the obstacles can be reached with the matching
crossing parity.
"""
from dataclasses import dataclass, field

from .geometry import (Instance, bbox, loop_parity, pair_parity_set,
                       self_separates)


@dataclass
class CoverGraph:
    ids: list
    weight: dict
    adj: dict = field(default_factory=dict)

    @property
    def vertices(self) -> list:
        return [(i, b) for i in self.ids for b in (0, 1)]

    def add_edge(self, u, v):
        if u[0] == v[0]:
            return
        self.adj[u].add(v)
        self.adj[v].add(u)

    def edges(self) -> set:
        out = set()
        for u, nb in self.adj.items():
            for v in nb:
                if u < v:
                    out.add((u, v))
        return out

    def sorted_adj(self) -> dict:
        return {u: sorted(nb) for u, nb in self.adj.items()}

    def vertex_weights(self) -> dict:
        return {(i, b): self.weight[i] for i in self.ids for b in (0, 1)}

    def to_json(self) -> dict:
        return {
            "vertices": [[i, b] for i, b in self.vertices],
            "weights": {str(i): str(self.weight[i]) for i in self.ids},
            "edges": [[list(u), list(v)] for u, v in sorted(self.edges())],
        }


def empty_cover(ids, weight) -> CoverGraph:
    g = CoverGraph(list(ids), dict(weight))
    for i in g.ids:
        g.adj[(i, 0)] = set()
        g.adj[(i, 1)] = set()
    return g


@dataclass
class PreprocessResult:
    stripped: list
    remainder: Instance


def strip_individual_separators(instance: Instance) -> PreprocessResult:
    """Split off obstacles that separate s from t on their own."""
    stripped = []
    keep = []
    for ob in instance.obstacles:
        if self_separates(ob, instance.s, instance.t):
            stripped.append((ob.id, ob.weight))
        else:
            keep.append(ob)
    return PreprocessResult(stripped, instance.with_obstacles(keep))


def candidate_pairs(obstacles):
    """Index pairs whose bounding boxes overlap (x-sorted sweep)."""
    boxes = [bbox(ob.shape) for ob in obstacles]
    order = sorted(range(len(obstacles)), key=lambda i: boxes[i][0])
    active = []
    for i in order:
        x0, y0, x1, y1 = boxes[i]
        active = [j for j in active if boxes[j][2] >= x0]
        for j in active:
            b = boxes[j]
            if b[1] <= y1 and y0 <= b[3]:
                yield (min(i, j), max(i, j))
        active.append(i)


def build_cover_graph(instance: Instance) -> CoverGraph:
    obs = instance.obstacles
    pi = instance.path
    for ob in obs:
        if loop_parity(ob, pi):
            raise ValueError(f"obstacle {ob.id} separates s and t on its own")
    g = empty_cover([ob.id for ob in obs], {ob.id: ob.weight for ob in obs})
    for i, j in candidate_pairs(obs):
        a, b = obs[i], obs[j]
        for par in pair_parity_set(a, b, pi):
            g.add_edge((a.id, 0), (b.id, par))
            g.add_edge((a.id, 1), (b.id, 1 ^ par))
    return g


def expand_auxiliary(H) -> CoverGraph:
    """Replace each arrangement-vertex copy of H by a clique on its neighbours."""
    g = empty_cover(H.ids, H.weight)
    for nbrs in H.vertex_nbrs.values():
        nbrs = sorted(nbrs)
        for x in range(len(nbrs)):
            for y in range(x + 1, len(nbrs)):
                g.add_edge(nbrs[x], nbrs[y])
    return g
