"""Slicing at the reference segment, static intersection, and biclique covers.

Every obstacle is cut where it crosses the (shifted) segment st.  A piece
never crosses the cut, so all of its points share one parity relative to the
obstacle's canonical point; call it rel_bit.  In sheet c of the cover the piece
belongs to the lift (origin, c ^ rel_bit), and two lifts meet iff two of their
pieces meet in the plane.

Points exactly on st count as lying on the side `side0` (the side a point on
the line is pushed to by the symbolic shift).  A piece on the other side is
therefore open where it was cut: SegPiece.open_a, DiskPiece.open.
"""
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .cover import strip_individual_separators
from .errors import (DegenerateOverlap, KindMismatch, NonUnitWeights,
                     NotAxisAligned, UnsupportedPath, UnsupportedShape)
from .geometry import (Disk, Instance, Point, Polyline, Segment, _circle_circle,
                       _seg_seg, canonical_point, chain_points, crosses_shifted,
                       dist2, dot, on_segment, orient, parity_to_point,
                       side_of_pi, sub)
from .paths import integer_weights, sssp_vertex_weighted, walk_back
from .qnum import QNum, sign
from .result import SeparatorResult, combine, ids_to_result

INF = float("inf")


@dataclass(frozen=True)
class SegPiece:
    a: Point
    b: Point
    open_a: bool = False  # a is a cut point that belongs to the other side

    @property
    def is_point(self) -> bool:
        return self.a == self.b


@dataclass(frozen=True)
class DiskPiece:
    center: Point
    radius: Fraction
    side: int = 0       # 0 whole disk, else the closed half-plane side*f >= 0
    open: bool = False  # the flat boundary lies on st and is excluded


@dataclass(frozen=True)
class SlicedObject:
    uid: int
    origin_id: int
    piece: Union[SegPiece, DiskPiece]
    rel_bit: int
    piece_canonical: Point

    def vertex(self, copy_bit: int):
        return (self.origin_id, copy_bit ^ self.rel_bit)


@dataclass
class SlicedInstance:
    pieces: list
    s: Point
    t: Point
    weight: dict
    kind: str

    def copy(self, c: int) -> list:
        """Pieces of sheet c with the cover vertex each one belongs to."""
        return [(p, p.vertex(c)) for p in self.pieces]

    def by_vertex(self) -> dict:
        out = defaultdict(lambda: ([], []))
        for p in self.pieces:
            for c in (0, 1):
                out[p.vertex(c)][c].append(p)
        return out


# --------------------------------------------------------------- slicing

def _line_side0(s, t) -> int:
    """Side of line st that points on st are assigned to."""
    dy = sign(t.y - s.y)
    return dy if dy else -sign(t.x - s.x)


def _f(s, t, q):
    return orient(s, t, q)


def _slice_segment(a, b, s, t):
    """Pieces of segment ab as SegPiece objects (b is always an original endpoint)."""
    if not crosses_shifted(a, b, s, t):
        return [SegPiece(a, b)]
    den = orient((0, 0), sub(b, a), sub(t, s))
    lam = orient((0, 0), sub(s, a), sub(t, s)) / den
    x = Point(a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y))
    s0 = _line_side0(s, t)
    # the endpoint on side0 keeps x, the other one is open at x
    if side_of_pi(s, t, a) == s0:
        return [SegPiece(x, a), SegPiece(x, b, True)]
    return [SegPiece(x, a, True), SegPiece(x, b)]


def _interior_sample(c, r, s, t, side):
    """A rational point strictly inside disk (c, r) and strictly on `side` of st."""
    u = sub(t, s)
    n = (-u[1], u[0])
    nn = dot(n, n)
    fc = _f(s, t, c)
    foot = (c[0] - fc * n[0] / nn, c[1] - fc * n[1] / nn)
    # p - c is a multiple of n, so only the offset along n matters
    mu = Fraction(1)
    while (side * mu - fc / nn) ** 2 * nn >= r * r:
        mu /= 2
    return Point(foot[0] + side * mu * n[0], foot[1] + side * mu * n[1])


def _slice_disk(ob, s, t, pi):
    c, r = ob.shape.center, ob.shape.radius
    u = sub(t, s)
    nn = dot(u, u)
    fc = _f(s, t, c)
    h2 = fc * fc / nn - r * r  # signed: distance^2 - r^2
    if h2 > 0:
        return [(DiskPiece(c, r), 0)]
    # chord (or tangency point) of the disk on the line through s and t
    n = (-u[1], u[0])
    foot = Point(c[0] - fc * n[0] / nn, c[1] - fc * n[1] / nn)
    lam_foot = dot(sub(foot, s), u) / nn
    if h2 == 0:
        if 0 <= lam_foot <= 1:
            raise DegenerateOverlap(f"disk {ob.id} is tangent to segment st")
        return [(DiskPiece(c, r), 0)]
    half = QNum.make(0, 1, -h2 / nn)  # half chord length in units of |u|
    lo, hi = lam_foot - half, lam_foot + half
    s0 = _line_side0(s, t)
    if hi < 0 or lo > 1:
        return [(DiskPiece(c, r, 1), 0), (DiskPiece(c, r, -1), 0)]
    if not (lo > 0 and hi < 1):
        raise AssertionError("disk contains s or t; strip it first")
    out = []
    for side in (s0, -s0):
        q = _interior_sample(c, r, s, t, side)
        bit = next(iter(parity_to_point(ob, q, pi)))
        out.append((DiskPiece(c, r, side, side != s0), bit))
    return out


def _piece_top(piece):
    if isinstance(piece, SegPiece):
        return max((piece.a, piece.b), key=lambda q: (q[1], q[0]))
    return Point(piece.center.x, piece.center.y + piece.radius)


def slice_at_reference(obstacles, s, t, kind: Optional[str] = None) -> SlicedInstance:
    """Cut every obstacle along segment st."""
    pi = (s, t)
    pieces = []
    kinds = set()
    for ob in obstacles:
        if isinstance(ob.shape, (Segment, Polyline)):
            kinds.add("segments")
            pts = chain_points(ob.shape)
            for i in range(len(pts) - 1):
                for sp in _slice_segment(pts[i], pts[i + 1], s, t):
                    bit = next(iter(parity_to_point(ob, sp.b, pi)))
                    pieces.append(SlicedObject(len(pieces), ob.id, sp, bit, _piece_top(sp)))
        elif isinstance(ob.shape, Disk):
            kinds.add("disks")
            for dp, bit in _slice_disk(ob, s, t, pi):
                pieces.append(SlicedObject(len(pieces), ob.id, dp, bit, _piece_top(dp)))
        else:
            raise UnsupportedShape(f"obstacle {ob.id} is a {ob.kind}")
    if len(kinds) > 1:
        raise UnsupportedShape("fast paths need a single obstacle kind")
    k = kind or (kinds.pop() if kinds else "segments")
    if k == "segments" and all(_axis_aligned(p.piece) for p in pieces):
        k = "axis-aligned-segments" if kind is None else k
    return SlicedInstance(pieces, s, t, {ob.id: ob.weight for ob in obstacles}, k)


# ------------------------------------------------------ piece predicates

@lru_cache(maxsize=1 << 16)
def seg_pieces_meet(p: SegPiece, q: SegPiece) -> bool:
    if p.is_point or q.is_point:
        if p.is_point and q.is_point:
            return p.a == q.a
        pt, seg = (p, q) if p.is_point else (q, p)
        if not on_segment(pt.a, seg.a, seg.b):
            return False
        return not (seg.open_a and pt.a == seg.a)
    reps = _seg_seg(p.a, p.b, q.a, q.b)
    if not reps:
        return False
    if len(reps) == 2:
        return True
    x = reps[0].point
    if p.open_a and x == p.a:
        return False
    if q.open_a and x == q.a:
        return False
    return True


def _lens_max_sign(p: DiskPiece, q: DiskPiece, s, t, direction: int) -> int:
    """Sign of max over the lens p ∩ q of direction * f."""
    u = sub(t, s)
    n = (-direction * u[1], direction * u[0])
    nn = dot(n, n)
    signs = []
    for a, b in ((p, q), (q, p)):
        k = QNum.make(0, a.radius / nn, nn)
        cap = (a.center.x + k * n[0], a.center.y + k * n[1])
        if sign(dist2(cap, b.center) - b.radius * b.radius) <= 0:
            signs.append(sign(dot(n, sub(cap, s))))
    for rep in _circle_circle(p.center, p.radius, q.center, q.radius):
        signs.append(sign(dot(n, sub(rep.point, s))))
    return max(signs)


@lru_cache(maxsize=1 << 16)
def disk_pieces_meet(p: DiskPiece, q: DiskPiece, s, t) -> bool:
    if dist2(p.center, q.center) > (p.radius + q.radius) ** 2:
        return False
    if p.side == 0 and q.side == 0:
        return True
    if p.side == 0 or q.side == 0 or p.side == q.side:
        side = p.side or q.side
        m = _lens_max_sign(p, q, s, t, side)
        if m != 0:
            return m > 0
        if p.open or q.open:
            raise DegenerateOverlap("disk lens touches st only on its boundary")
        return True
    if p.open or q.open:
        return False
    return _lens_max_sign(p, q, s, t, 1) >= 0 and _lens_max_sign(p, q, s, t, -1) >= 0


def _axis_aligned(piece) -> bool:
    return isinstance(piece, SegPiece) and (piece.a.x == piece.b.x or piece.a.y == piece.b.y)


# ----------------------------------------------------- static intersection

KINDS = ("axis-aligned-segments", "segments", "disks")


def _norm_kind(kind):
    if kind in ("axis", "axis-aligned"):
        return "axis-aligned-segments"
    if kind not in KINDS:
        raise KindMismatch(f"unknown static-intersection kind {kind!r}")
    return kind


def _interval(p: SegPiece, k: int):
    """Closed/open interval of a piece along axis k, as ordered key tuples."""
    lo, hi = sorted((p.a, p.b), key=lambda q: q[k])
    lo_key = (lo[k], 1 if (p.open_a and lo == p.a and not p.is_point) else 0)
    hi_key = (hi[k], -1 if (p.open_a and hi == p.a and not p.is_point) else 0)
    return lo_key, hi_key


class _StabTree:
    """Intervals along one axis with a sorted cross-coordinate list per node.

    stab(key, lo, hi) reports the items whose interval contains key and whose
    cross coordinate lies in [lo, hi].
    """

    def __init__(self, items):
        # items: (interval_lo, interval_hi, cross_key, payload)
        keys = sorted({it[0] for it in items} | {it[1] for it in items})
        self.keys = keys
        self.size = max(1, 2 * len(keys) - 1)
        self.nodes = defaultdict(list)
        for lo, hi, ck, payload in items:
            a = 2 * bisect_left(keys, lo)
            b = 2 * bisect_left(keys, hi)
            self._insert(1, 0, self.size - 1, a, b, (ck, payload))
        for v in self.nodes.values():
            v.sort(key=lambda x: x[0])
        self.cross = {n: [x[0] for x in v] for n, v in self.nodes.items()}

    def _insert(self, node, l, r, a, b, item):
        if b < l or r < a:
            return
        if a <= l and r <= b:
            self.nodes[node].append(item)
            return
        m = (l + r) // 2
        self._insert(2 * node, l, m, a, b, item)
        self._insert(2 * node + 1, m + 1, r, a, b, item)

    def _leaf(self, key):
        i = bisect_left(self.keys, key)
        if i < len(self.keys) and self.keys[i] == key:
            return 2 * i
        if i == 0 or i == len(self.keys):
            return None
        return 2 * i - 1

    def path(self, key):
        """Nodes on the root-to-leaf path of key (empty if outside all intervals)."""
        leaf = self._leaf(key)
        if leaf is None:
            return []
        out = []
        node, l, r = 1, 0, self.size - 1
        while True:
            out.append(node)
            if l == r:
                return out
            m = (l + r) // 2
            if leaf <= m:
                node, r = 2 * node, m
            else:
                node, l = 2 * node + 1, m + 1

    def stab(self, key, lo, hi, first_only=False):
        found = []
        for node in self.path(key):
            xs = self.cross.get(node)
            if not xs:
                continue
            i = bisect_left(xs, (lo[0], lo[1], -INF))
            j = bisect_right(xs, (hi[0], hi[1], INF))
            if i < j:
                if first_only:
                    return [self.nodes[node][i][1]]
                found.extend(x[1] for x in self.nodes[node][i:j])
        return found


class _LineIntervals:
    """Collinear overlap lookup: axis-parallel intervals grouped by their line."""

    def __init__(self, items):
        # items: (line_coord, lo, hi, payload)
        groups = defaultdict(list)
        for line, lo, hi, payload in items:
            groups[line].append((lo, hi, payload))
        self.groups = {}
        for line, lst in groups.items():
            lst.sort(key=lambda x: x[0])
            los = [x[0] for x in lst]
            pmax = []
            best = None
            for x in lst:
                best = x[1] if best is None or x[1] > best else best
                pmax.append(best)
            self.groups[line] = (los, pmax, lst)

    def query(self, line, lo, hi, first_only=False):
        g = self.groups.get(line)
        if g is None:
            return []
        los, pmax, lst = g
        j = bisect_right(los, hi)
        if first_only:
            return [lst[0][2]] if j and pmax[j - 1] >= lo else []
        return [x[2] for x in lst[:j] if x[1] >= lo]


@dataclass
class SIStructure:
    kind: str
    items: list
    s: Point
    t: Point
    index: dict = field(default_factory=dict)


def _axis_parts(piece):
    """('h', y, xlo, xhi) or ('v', x, ylo, yhi); points count as horizontal."""
    if piece.a.y == piece.b.y:
        lo, hi = _interval(piece, 0)
        return "h", piece.a.y, lo, hi
    if piece.a.x != piece.b.x:
        raise NotAxisAligned("piece is not axis-aligned")
    lo, hi = _interval(piece, 1)
    return "v", piece.a.x, lo, hi


def _grid_cells(box, cell):
    x0, y0, x1, y1 = box
    for i in range(int(x0 // cell), int(x1 // cell) + 1):
        for j in range(int(y0 // cell), int(y1 // cell) + 1):
            yield (i, j)


def _piece_box(piece):
    if isinstance(piece, SegPiece):
        return (min(piece.a.x, piece.b.x), min(piece.a.y, piece.b.y),
                max(piece.a.x, piece.b.x), max(piece.a.y, piece.b.y))
    c, r = piece.center, piece.radius
    return (c.x - r, c.y - r, c.x + r, c.y + r)


def _check_kind(kind, piece):
    if kind == "disks":
        ok = isinstance(piece, DiskPiece)
    elif kind == "segments":
        ok = isinstance(piece, SegPiece)
    else:
        ok = _axis_aligned(piece)
    if not ok:
        raise KindMismatch(f"{type(piece).__name__} does not fit kind {kind}")


def si_build(kind, build_set, s, t) -> SIStructure:
    """Static structure over pieces (SlicedObject or bare pieces) of one kind."""
    kind = _norm_kind(kind)
    items = [b if isinstance(b, SlicedObject) else None for b in build_set]
    pieces = [b.piece if isinstance(b, SlicedObject) else b for b in build_set]
    for p in pieces:
        _check_kind(kind, p)
    st = SIStructure(kind, list(zip(pieces, items)), s, t)
    if kind == "axis-aligned-segments":
        hs, vs = [], []
        for k, p in enumerate(pieces):
            d, line, lo, hi = _axis_parts(p)
            (hs if d == "h" else vs).append((line, lo, hi, k))
        # verticals stabbed by horizontal queries: interval in y, cross key x
        st.index["v_tree"] = _StabTree([(lo, hi, (x, 0, k), k) for x, lo, hi, k in vs])
        st.index["h_tree"] = _StabTree([(lo, hi, (y, 0, k), k) for y, lo, hi, k in hs])
        st.index["h_lines"] = _LineIntervals(hs)
        st.index["v_lines"] = _LineIntervals(vs)
    else:
        boxes = [_piece_box(p) for p in pieces]
        if boxes:
            span = max(max(b[2] - b[0], b[3] - b[1]) for b in boxes)
            cell = max(Fraction(span), Fraction(1, 1 << 30))
        else:
            cell = Fraction(1)
        grid = defaultdict(list)
        for k, b in enumerate(boxes):
            for key in _grid_cells(b, cell):
                grid[key].append(k)
        st.index["cell"] = cell
        st.index["grid"] = grid
        st.index["boxes"] = boxes
    return st


def _meet(kind, p, q, s, t):
    if kind == "disks":
        return disk_pieces_meet(p, q, s, t)
    return seg_pieces_meet(p, q)


def si_report(st: SIStructure, obj, first_only=False) -> list:
    """Indices of build pieces meeting the query piece."""
    q = obj.piece if isinstance(obj, SlicedObject) else obj
    _check_kind(st.kind, q)
    if st.kind == "axis-aligned-segments":
        d, line, lo, hi = _axis_parts(q)
        key = (line, 0)
        if d == "h":
            cross = st.index["v_tree"].stab(key, lo, hi, first_only)
            if first_only and cross:
                return cross
            same = st.index["h_lines"].query(line, lo, hi, first_only)
        else:
            cross = st.index["h_tree"].stab(key, lo, hi, first_only)
            if first_only and cross:
                return cross
            same = st.index["v_lines"].query(line, lo, hi, first_only)
        return sorted(set(cross) | set(same))
    box = _piece_box(q)
    seen = set()
    out = []
    for key in _grid_cells(box, st.index["cell"]):
        for k in st.index["grid"].get(key, ()):
            if k in seen:
                continue
            seen.add(k)
            b = st.index["boxes"][k]
            if b[2] < box[0] or box[2] < b[0] or b[3] < box[1] or box[3] < b[1]:
                continue
            if _meet(st.kind, st.items[k][0], q, st.s, st.t):
                out.append(k)
                if first_only:
                    return out
    return sorted(out)


def si_query(st: SIStructure, obj) -> bool:
    return bool(si_report(st, obj, first_only=True))


def si_pairs(sliced: SlicedInstance, kind=None) -> list:
    """All intersecting piece pairs (uid_i < uid_j) of different origins."""
    kind = _norm_kind(kind or sliced.kind)
    st = si_build(kind, sliced.pieces, sliced.s, sliced.t)
    out = []
    for i, p in enumerate(sliced.pieces):
        for j in si_report(st, p):
            if j > i and sliced.pieces[j].origin_id != p.origin_id:
                out.append((i, j))
    return out


# ------------------------------------------------------- unweighted APSP

def _all_vertices(sliced):
    ids = sorted(sliced.weight)
    return [(i, b) for i in ids for b in (0, 1)]


def apsp_unweighted_si(sliced: SlicedInstance, kind=None, sources=None) -> dict:
    """Hop distances from each source by layered breadth-first search.

    Each layer builds a static structure over the frontier's pieces in one
    sheet and queries the pieces of every unvisited vertex in that sheet.
    """
    kind = _norm_kind(kind or sliced.kind)
    owned = sliced.by_vertex()
    verts = _all_vertices(sliced)
    if sources is None:
        sources = verts
    out = {}
    for src in sources:
        dist = {src: 0}
        frontier = [src]
        unvisited = [v for v in verts if v != src]
        d = 0
        while frontier and unvisited:
            d += 1
            hit = set()
            for c in (0, 1):
                build = [p for v in frontier for p in owned[v][c]]
                if not build:
                    continue
                st = si_build(kind, build, sliced.s, sliced.t)
                for v in unvisited:
                    if v in hit:
                        continue
                    if any(si_query(st, p) for p in owned[v][c]):
                        hit.add(v)
            frontier = sorted(hit)
            for v in frontier:
                dist[v] = d
            unvisited = [v for v in unvisited if v not in hit]
        out[src] = dist
    return out


def _sparse_cover(sliced, pairs):
    verts = _all_vertices(sliced)
    index = {v: k for k, v in enumerate(verts)}
    rows, cols = [], []
    for i, j in pairs:
        p, q = sliced.pieces[i], sliced.pieces[j]
        for c in (0, 1):
            a, b = index[p.vertex(c)], index[q.vertex(c)]
            rows += [a, b]
            cols += [b, a]
    n = len(verts)
    m = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    return verts, index, m


def solve_unweighted_fast(instance: Instance, kind=None, method="pairs") -> SeparatorResult:
    """Unit-weight optimum through static intersection on sliced pieces."""
    tag = "si"
    for ob in instance.obstacles:
        if ob.weight != 1:
            raise NonUnitWeights(f"obstacle {ob.id} has weight {ob.weight}")
    if instance.pi is not None and tuple(instance.pi) != (instance.s, instance.t):
        raise UnsupportedPath("fast paths use the segment st as reference path")
    pre = strip_individual_separators(instance)
    obs = pre.remainder.obstacles
    if not obs:
        return combine(pre.stripped, SeparatorResult.infeasible(tag))
    sliced = slice_at_reference(obs, instance.s, instance.t)
    if kind is not None:
        kind = _norm_kind(kind)
        if kind == "axis-aligned-segments" and sliced.kind != kind:
            raise NotAxisAligned("instance is not axis-aligned")
        sliced.kind = kind
    ids = sorted(sliced.weight)
    if method == "layers":
        dists = apsp_unweighted_si(sliced, sliced.kind, [(i, 0) for i in ids])
        best = None
        for i in ids:
            d = dists[(i, 0)].get((i, 1))
            if d is not None and (best is None or d < best[0]):
                best = (d, i)
        if best is None:
            return combine(pre.stripped, SeparatorResult.infeasible(tag))
        # recover a witness on the explicit graph of the winning source
        pairs = si_pairs(sliced)
    else:
        pairs = si_pairs(sliced)
        best = None
    verts, index, m = _sparse_cover(sliced, pairs)
    if best is None:
        src = [index[(i, 0)] for i in ids]
        D = shortest_path(m, unweighted=True, directed=False, indices=src)
        diag = np.array([D[k, index[(i, 1)]] for k, i in enumerate(ids)])
        k = int(np.argmin(diag))
        if not np.isfinite(diag[k]):
            return combine(pre.stripped, SeparatorResult.infeasible(tag))
        best = (int(diag[k]), ids[k])
    _, pred = shortest_path(m, unweighted=True, directed=False,
                            indices=index[(best[1], 0)], return_predecessors=True)
    path = [index[(best[1], 1)]]
    while pred[path[-1]] >= 0:
        path.append(int(pred[path[-1]]))
    path = [verts[k] for k in path[::-1]]
    res = ids_to_result([v[0] for v in path], sliced.weight, tag, path)
    return combine(pre.stripped, res)


# ---------------------------------------------------------- biclique covers

@dataclass
class BicliqueCover:
    bicliques: list  # (A, B) pairs of vertex lists

    def covered_pairs(self) -> set:
        out = set()
        for A, B in self.bicliques:
            for a in A:
                for b in B:
                    if a != b:
                        out.add((min(a, b), max(a, b)))
        return out

    def __len__(self):
        return len(self.bicliques)


def _segment_tree_ranges(l, r, a, b, node=1):
    """Canonical nodes covering positions a..b of a tree over l..r."""
    if b < l or r < a:
        return []
    if a <= l and r <= b:
        return [(node, l, r)]
    m = (l + r) // 2
    return (_segment_tree_ranges(l, m, a, b, 2 * node)
            + _segment_tree_ranges(m + 1, r, a, b, 2 * node + 1))


def _interval_bicliques(intervals):
    """Bicliques for overlapping pairs of 1D intervals (lo, hi, label).

    Pairs (I, J) with J's left end inside I: A = intervals covering a
    canonical node, B = intervals whose left end falls under that node.
    """
    keys = sorted({iv[0] for iv in intervals} | {iv[1] for iv in intervals})
    size = max(1, 2 * len(keys) - 1)
    A = defaultdict(list)
    B = defaultdict(list)
    for lo, hi, label in intervals:
        a, b = 2 * bisect_left(keys, lo), 2 * bisect_left(keys, hi)
        for node, _, _ in _segment_tree_ranges(0, size - 1, a, b):
            A[node].append(label)
        # every ancestor of the leaf of lo sees it in its subtree
        node, l, r = 1, 0, size - 1
        while True:
            B[node].append(label)
            if l == r:
                break
            m = (l + r) // 2
            if a <= m:
                node, r = 2 * node, m
            else:
                node, l = 2 * node + 1, m + 1
    return [(A[n], B[n]) for n in A if B.get(n)]


def _dedupe_side(xs):
    return sorted(set(xs))


def biclique_cover_axis_aligned(pieces) -> BicliqueCover:
    """Cover of the intersection graph of axis-aligned pieces of one sheet.

    pieces: list of (piece, label).  Crossing pairs come from a two-level
    decomposition (verticals by y-interval, then by x order); collinear
    overlaps from per-line interval bicliques.
    """
    hs, vs = [], []
    for piece, label in pieces:
        if not _axis_aligned(piece):
            raise NotAxisAligned("piece is not axis-aligned")
        d, line, lo, hi = _axis_parts(piece)
        (hs if d == "h" else vs).append((line, lo, hi, label, piece))
    out = []
    # horizontal x vertical crossings: vertical interval in y contains the
    # horizontal's y, and the vertical's x is in the horizontal's x-range
    tree = _StabTree([(lo, hi, (x, 0, k), k) for k, (x, lo, hi, _, _) in enumerate(vs)])
    groups = defaultdict(list)
    for hk, (y, lo, hi, label, _) in enumerate(hs):
        for node in tree.path((y, 0)):
            xs = tree.cross.get(node)
            if not xs:
                continue
            i = bisect_left(xs, (lo[0], lo[1], -INF))
            j = bisect_right(xs, (hi[0], hi[1], INF)) - 1
            if i > j:
                continue
            for sub_node, l, r in _segment_tree_ranges(0, len(xs) - 1, i, j):
                groups[(node, sub_node)].append(label)
    for (node, sub_node), B in groups.items():
        n = len(tree.cross[node])
        l, r = _node_span(sub_node, n)
        A = [vs[tree.nodes[node][k][1]][3] for k in range(l, r + 1)]
        out.append((_dedupe_side(A), _dedupe_side(B)))
    # collinear overlaps; point pieces are filed as horizontals, so a point
    # on a vertical is already covered by the crossing part
    for group in (hs, vs):
        lines = defaultdict(list)
        for line, lo, hi, label, _ in group:
            lines[line].append((lo, hi, label))
        for ivs in lines.values():
            for A, B in _interval_bicliques(ivs):
                out.append((_dedupe_side(A), _dedupe_side(B)))
    # an interval overlaps itself; a biclique holding only that pair is a loop
    return BicliqueCover([(A, B) for A, B in out if A and B and not (len(A) == 1 and A == B)])


def _node_span(node, n):
    """Positions covered by segment-tree node id over 0..n-1."""
    l, r = 0, n - 1
    path = []
    while node > 1:
        path.append(node & 1)
        node >>= 1
    for bit in reversed(path):
        m = (l + r) // 2
        if bit:
            l = m + 1
        else:
            r = m
    return l, r


def biclique_cover_generic(edges) -> BicliqueCover:
    """One biclique ({u}, {v}) per edge."""
    return BicliqueCover([([u], [v]) for u, v in sorted(edges)])


def biclique_to_graph(cover: BicliqueCover, weights: dict):
    """Directed hub graph with the same enter-cost distances as the covered graph.

    Returns (adj, weight).  Biclique i adds hubs (1 << 62, i, 0) and
    (1 << 62, i, 1) of weight 0 with a -> u_i -> b and b -> u'_i -> a; the
    huge first entry keeps hubs comparable with (id, bit) vertices.
    """
    adj = defaultdict(list)
    weight = dict(weights)
    for v in weights:
        adj[v]
    for i, (A, B) in enumerate(cover.bicliques):
        u, u2 = (1 << 62, i, 0), (1 << 62, i, 1)
        weight[u] = weight[u2] = 0
        for a in A:
            adj[a].append(u)
            adj[u2].append(a)
        for b in B:
            adj[u].append(b)
            adj[b].append(u2)
    return dict(adj), weight


def solve_weighted_biclique(instance: Instance, cover="auto") -> SeparatorResult:
    """Weighted optimum by shortest paths in the biclique hub graph."""
    tag = "biclique"
    if instance.pi is not None and tuple(instance.pi) != (instance.s, instance.t):
        raise UnsupportedPath("fast paths use the segment st as reference path")
    for ob in instance.obstacles:
        if not isinstance(ob.shape, (Segment, Polyline)):
            raise UnsupportedShape(f"obstacle {ob.id} is a {ob.kind}")
    pre = strip_individual_separators(instance)
    obs = pre.remainder.obstacles
    if not obs:
        return combine(pre.stripped, SeparatorResult.infeasible(tag))
    sliced = slice_at_reference(obs, instance.s, instance.t)
    use_axis = cover == "axis" or (cover == "auto" and sliced.kind == "axis-aligned-segments")
    bicliques = []
    if use_axis:
        for c in (0, 1):
            bicliques += biclique_cover_axis_aligned(
                [(p.piece, p.vertex(c)) for p in sliced.pieces]).bicliques
    else:
        edges = set()
        for i, j in si_pairs(sliced, "segments"):
            p, q = sliced.pieces[i], sliced.pieces[j]
            for c in (0, 1):
                a, b = p.vertex(c), q.vertex(c)
                edges.add((min(a, b), max(a, b)))
        bicliques = biclique_cover_generic(edges).bicliques
    bc = BicliqueCover(bicliques)
    vw = {(i, b): w for i, w in sliced.weight.items() for b in (0, 1)}
    adj, weight = biclique_to_graph(bc, vw)
    weight, _ = integer_weights(weight)
    best, best_path = None, None
    for i in sorted(sliced.weight):
        src, dst = (i, 0), (i, 1)
        dist, parent = sssp_vertex_weighted(adj, weight, src, dst, best)
        d = dist.get(dst)
        if d is None or (best is not None and d >= best):
            continue
        best, best_path = d, walk_back(parent, dst)
    if best is None:
        return combine(pre.stripped, SeparatorResult.infeasible(tag))
    path = [v for v in best_path if v[0] != 1 << 62]
    res = ids_to_result([v[0] for v in path], sliced.weight, tag, path)
    return combine(pre.stripped, res)
