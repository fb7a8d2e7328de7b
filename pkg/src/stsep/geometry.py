"""Exact geometric primitives for obstacles, intersections and crossing parity.

Coordinates are Fractions.  Points produced by circle intersections may carry
QNum coordinates; every predicate below accepts either.

Crossing parity against the reference path pi is computed against a
symbolically shifted copy pi + (eps, eps^2).  This never changes which side
of pi the points s and t lie on, and it resolves every touching or overlapping
configuration consistently, so parities are additive along chains.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Union

from .errors import InvalidInstance, PointNotOnObstacle, PointOnObstacle
from .qnum import QNum, sign


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def coord(v) -> Fraction:
    """Parse an int, Fraction, float, decimal string or "p/q" string exactly."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(v, (int, float)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot read coordinate {v!r}")


def P(x, y) -> Point:
    return Point(coord(x), coord(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point
    kind = "segment"


@dataclass(frozen=True)
class Polyline:
    points: tuple
    kind = "polyline"


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: Fraction
    kind = "circle"

    def __post_init__(self):
        object.__setattr__(self, "radius", coord(self.radius))


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: Fraction
    kind = "disk"

    def __post_init__(self):
        object.__setattr__(self, "radius", coord(self.radius))


Shape = Union[Segment, Polyline, Circle, Disk]


@dataclass(frozen=True)
class Obstacle:
    id: int
    weight: Fraction
    shape: Shape

    def __post_init__(self):
        object.__setattr__(self, "weight", coord(self.weight))

    @property
    def kind(self) -> str:
        return self.shape.kind


@dataclass(frozen=True)
class Instance:
    obstacles: tuple
    s: Point
    t: Point
    pi: Optional[tuple] = None

    @property
    def path(self) -> tuple:
        return self.pi if self.pi is not None else (self.s, self.t)

    def by_id(self) -> dict:
        return {ob.id: ob for ob in self.obstacles}

    def with_obstacles(self, obstacles) -> "Instance":
        return Instance(tuple(obstacles), self.s, self.t, self.pi)


@dataclass(frozen=True)
class Arc:
    """Counterclockwise arc of a circle from start to end (full loop if full)."""
    center: Point
    radius: Fraction
    start: Point
    end: Point
    full: bool = False


@dataclass(frozen=True)
class Rep:
    """Representative intersection point of one intersection component."""
    point: tuple
    tag: str  # crossing | touch | overlap | region


# ---------------------------------------------------------------- basics

def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def dist2(a, b):
    dx, dy = a[0] - b[0], a[1] - b[1]
    return dx * dx + dy * dy


def make_shape(kind: str, geometry) -> Shape:
    if kind == "segment":
        a, b = geometry
        return Segment(P(*a), P(*b))
    if kind == "polyline":
        return Polyline(tuple(P(*q) for q in geometry))
    if kind in ("circle", "disk"):
        c, r = geometry
        cls = Circle if kind == "circle" else Disk
        return cls(P(*c), coord(r))
    raise InvalidInstance(f"unknown obstacle kind {kind!r}")


def chain_points(shape) -> tuple:
    if isinstance(shape, Segment):
        return (shape.a, shape.b)
    if isinstance(shape, Polyline):
        return shape.points
    raise TypeError("not a chain")


def on_segment(p, a, b) -> bool:
    if sign(orient(a, b, p)) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def on_shape(p, shape) -> bool:
    """Closed membership: boundary for circles, filled region for disks."""
    if isinstance(shape, (Segment, Polyline)):
        pts = chain_points(shape)
        return any(on_segment(p, pts[i], pts[i + 1]) for i in range(len(pts) - 1))
    d = sign(dist2(p, shape.center) - shape.radius * shape.radius)
    if isinstance(shape, Circle):
        return d == 0
    return d <= 0


def canonical_point(ob) -> Point:
    """Point of maximum y, ties broken by maximum x."""
    shape = ob.shape if isinstance(ob, Obstacle) else ob
    if isinstance(shape, (Circle, Disk)):
        return Point(shape.center.x, shape.center.y + shape.radius)
    return max(chain_points(shape), key=lambda q: (q[1], q[0]))


def bbox(shape):
    if isinstance(shape, (Circle, Disk)):
        c, r = shape.center, shape.radius
        return (c.x - r, c.y - r, c.x + r, c.y + r)
    pts = chain_points(shape)
    xs = [q.x for q in pts]
    ys = [q.y for q in pts]
    return (min(xs), min(ys), max(xs), max(ys))


# ------------------------------------------------------ perturbed parity

def side_of_pi(q1, q2, a) -> int:
    """Sign of orient(q1 + d, q2 + d, a) for d = (eps, eps^2), eps -> 0+."""
    s = sign(orient(q1, q2, a))
    if s:
        return s
    dy = sign(q2[1] - q1[1])
    if dy:
        return dy
    return -sign(q2[0] - q1[0])


def side_of_chain(a, b, q) -> int:
    """Sign of orient(a, b, q + d) for d = (eps, eps^2), eps -> 0+."""
    s = sign(orient(a, b, q))
    if s:
        return s
    dy = sign(b[1] - a[1])
    if dy:
        return -dy
    return sign(b[0] - a[0])


def crosses_shifted(a, b, q1, q2) -> bool:
    """Does segment ab cross the shifted segment q1q2?  Never degenerate."""
    if side_of_pi(q1, q2, a) == side_of_pi(q1, q2, b):
        return False
    return side_of_chain(a, b, q1) != side_of_chain(a, b, q2)


def _chain_parity(pts, pi) -> int:
    par = 0
    for i in range(len(pts) - 1):
        a, b = pts[i], pts[i + 1]
        if a[0] == b[0] and a[1] == b[1]:
            continue
        for j in range(len(pi) - 1):
            if crosses_shifted(a, b, pi[j], pi[j + 1]):
                par ^= 1
    return par


def _strictly_inside(q, center, radius) -> Optional[bool]:
    d = sign(dist2(q, center) - radius * radius)
    if d == 0:
        return None
    return d < 0


def _arc_parity(arc: Arc, pi) -> int:
    s, t = pi[0], pi[-1]
    ins = _strictly_inside(s, arc.center, arc.radius)
    int_ = _strictly_inside(t, arc.center, arc.radius)
    if ins is None or int_ is None:
        raise PointOnObstacle("s or t lies on the circle")
    if arc.full:
        return int(ins != int_)
    u, v = arc.start, arc.end
    if u[0] == v[0] and u[1] == v[1]:
        return 0
    # the ccw arc from u to v and the chord v->u bound the region of the
    # disk to the right of u->v; pi enters it once per endpoint inside it
    par = _chain_parity((u, v), pi)
    if ins and side_of_chain(u, v, s) < 0:
        par ^= 1
    if int_ and side_of_chain(u, v, t) < 0:
        par ^= 1
    return par


def crossing_parity(chain, pi: Sequence) -> int:
    """Crossings of a chain (point sequence or Arc) with pi, mod 2."""
    if isinstance(chain, Arc):
        return _arc_parity(chain, pi)
    if isinstance(chain, (Segment, Polyline)):
        chain = chain_points(chain)
    return _chain_parity(chain, pi)


# --------------------------------------------------- obstacle predicates

def self_separates(ob, s, t) -> bool:
    """Does this obstacle on its own separate s from t?"""
    shape = ob.shape if isinstance(ob, Obstacle) else ob
    if isinstance(shape, (Segment, Polyline)):
        if on_shape(s, shape) or on_shape(t, shape):
            raise PointOnObstacle("s or t lies on the obstacle")
        return False
    ins = _strictly_inside(s, shape.center, shape.radius)
    int_ = _strictly_inside(t, shape.center, shape.radius)
    if ins is None or int_ is None:
        raise PointOnObstacle("s or t lies on the obstacle boundary")
    if isinstance(shape, Circle):
        return ins != int_
    # a filled disk holding s or t meets every path between them
    return ins or int_


def loop_parity(ob, pi) -> int:
    """Parity of the full boundary loop (0 for arcs, which have no loop)."""
    shape = ob.shape if isinstance(ob, Obstacle) else ob
    if isinstance(shape, (Circle, Disk)):
        c = canonical_point(shape)
        return _arc_parity(Arc(shape.center, shape.radius, c, c, True), pi)
    return 0


def _subchain(pts, i, p):
    """Chain inside the polyline pts from vertex i to the point p."""
    for j in range(len(pts) - 1):
        if on_segment(p, pts[j], pts[j + 1]):
            if j >= i:
                return list(pts[i:j + 1]) + [p]
            return list(pts[j + 1:i + 1])[::-1] + [p]
    raise PointNotOnObstacle("point is not on the chain")


def parity_to_point(ob, p, pi) -> frozenset:
    """Crossing parities of paths inside the obstacle from its canonical point to p."""
    shape = ob.shape if isinstance(ob, Obstacle) else ob
    c = canonical_point(shape)
    if isinstance(shape, (Segment, Polyline)):
        pts = chain_points(shape)
        i = pts.index(c)
        return frozenset((_chain_parity(_subchain(pts, i, p), pi),))
    if not on_shape(p, shape):
        raise PointNotOnObstacle("point is not on the obstacle")
    if isinstance(shape, Disk):
        return frozenset((_chain_parity((c, p), pi),))
    v = _arc_parity(Arc(shape.center, shape.radius, c, p), pi)
    return frozenset((v, v ^ loop_parity(shape, pi)))


# ------------------------------------------------------- intersections

def _seg_seg(a, b, c, d):
    o1, o2 = sign(orient(a, b, c)), sign(orient(a, b, d))
    if o1 == 0 and o2 == 0:
        # collinear: overlap along the dominant axis
        k = 0 if a[0] != b[0] else 1
        lo1, hi1 = sorted((a, b), key=lambda q: q[k])
        lo2, hi2 = sorted((c, d), key=lambda q: q[k])
        lo = lo1 if lo1[k] >= lo2[k] else lo2
        hi = hi1 if hi1[k] <= hi2[k] else hi2
        if lo[k] > hi[k]:
            return []
        if lo[k] == hi[k]:
            return [Rep(Point(*lo), "touch")]
        return [Rep(Point(*lo), "overlap"), Rep(Point(*hi), "overlap")]
    o3, o4 = sign(orient(c, d, a)), sign(orient(c, d, b))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return []
    den = orient((0, 0), sub(b, a), sub(d, c))
    lam = orient((0, 0), sub(c, a), sub(d, c)) / den
    p = Point(a[0] + lam * (b[0] - a[0]), a[1] + lam * (b[1] - a[1]))
    tag = "crossing" if o1 and o2 and o3 and o4 else "touch"
    return [Rep(p, tag)]


def _seg_circle(a, b, c, r):
    v = sub(b, a)
    w = sub(a, c)
    A = dot(v, v)
    B = 2 * dot(v, w)
    C = dot(w, w) - r * r
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    roots = [QNum.make(-B / (2 * A), 1 / (2 * A), disc)]
    if disc != 0:
        roots.append(QNum.make(-B / (2 * A), -1 / (2 * A), disc))
    out = []
    for lam in roots:
        if lam < 0 or lam > 1:
            continue
        p = Point(a[0] + lam * v[0], a[1] + lam * v[1])
        tag = "touch" if disc == 0 or lam == 0 or lam == 1 else "crossing"
        out.append(Rep(p, tag))
    return out


def _circle_circle(c1, r1, c2, r2):
    d2 = dist2(c1, c2)
    if d2 == 0:
        if r1 == r2:
            return [Rep(Point(c1.x, c1.y + r1), "overlap")]
        return []
    if d2 > (r1 + r2) ** 2 or d2 < (r1 - r2) ** 2:
        return []
    k = ((r1 * r1 - r2 * r2) / d2 + 1) / 2
    dx, dy = c2.x - c1.x, c2.y - c1.y
    q0 = (c1.x + k * dx, c1.y + k * dy)
    m = (r1 * r1 - k * k * d2) / d2
    if m == 0:
        return [Rep(Point(*q0), "touch")]
    out = []
    for sg in (1, -1):
        mu = QNum.make(0, sg, m)
        out.append(Rep(Point(q0[0] - mu * dy, q0[1] + mu * dx), "crossing"))
    return out


def _closest_on_segment(c, a, b):
    v = sub(b, a)
    lam = dot(sub(c, a), v) / dot(v, v)
    lam = min(max(lam, Fraction(0)), Fraction(1))
    return Point(a[0] + lam * v[0], a[1] + lam * v[1])


def _disk_chain(c, r, pts):
    out = []
    for i in range(len(pts) - 1):
        q = _closest_on_segment(c, pts[i], pts[i + 1])
        if dist2(q, c) <= r * r:
            out.append(Rep(q, "region"))
    return out


def _disk_circle(c1, r1, c2, r2):
    """Disk (c1, r1) against circle (c2, r2): closest circle point to c1."""
    d2 = dist2(c1, c2)
    if d2 == 0:
        if r2 <= r1:
            return [Rep(Point(c2.x, c2.y + r2), "region")]
        return []
    f = QNum.make(0, r2 / d2, d2)
    p = Point(c2.x + f * (c1.x - c2.x), c2.y + f * (c1.y - c2.y))
    if sign(dist2(p, c1) - r1 * r1) <= 0:
        return [Rep(p, "region")]
    return []


def _bbox_disjoint(s1, s2) -> bool:
    a = bbox(s1)
    b = bbox(s2)
    return a[2] < b[0] or b[2] < a[0] or a[3] < b[1] or b[3] < a[1]


def _dedupe(reps):
    seen = set()
    out = []
    for rep in reps:
        key = rep.point
        if any(isinstance(v, QNum) for v in key):
            out.append(rep)
            continue
        if key in seen:
            continue
        seen.add(key)
        out.append(rep)
    return out


def obstacles_intersect(g1, g2) -> list:
    """Representative points, at least one per intersection component."""
    s1 = g1.shape if isinstance(g1, Obstacle) else g1
    s2 = g2.shape if isinstance(g2, Obstacle) else g2
    if _bbox_disjoint(s1, s2):
        return []
    chain1 = isinstance(s1, (Segment, Polyline))
    chain2 = isinstance(s2, (Segment, Polyline))
    if chain1 and chain2:
        p1, p2 = chain_points(s1), chain_points(s2)
        reps = []
        for i in range(len(p1) - 1):
            for j in range(len(p2) - 1):
                reps.extend(_seg_seg(p1[i], p1[i + 1], p2[j], p2[j + 1]))
        return _dedupe(reps)
    if chain2 and not chain1:
        return obstacles_intersect(s2, s1)
    if chain1:
        pts = chain_points(s1)
        if isinstance(s2, Disk):
            return _dedupe(_disk_chain(s2.center, s2.radius, pts))
        reps = []
        for i in range(len(pts) - 1):
            reps.extend(_seg_circle(pts[i], pts[i + 1], s2.center, s2.radius))
        return _dedupe(reps)
    if isinstance(s1, Circle) and isinstance(s2, Circle):
        return _circle_circle(s1.center, s1.radius, s2.center, s2.radius)
    if isinstance(s1, Disk) and isinstance(s2, Disk):
        d2 = dist2(s1.center, s2.center)
        if d2 > (s1.radius + s2.radius) ** 2:
            return []
        f = s1.radius / (s1.radius + s2.radius)
        c1, c2 = s1.center, s2.center
        return [Rep(Point(c1.x + f * (c2.x - c1.x), c1.y + f * (c2.y - c1.y)), "region")]
    if isinstance(s1, Disk):
        return _disk_circle(s1.center, s1.radius, s2.center, s2.radius)
    return _disk_circle(s2.center, s2.radius, s1.center, s1.radius)


def pair_parity_set(g1, g2, pi) -> frozenset:
    """Achievable values of (parity to x in g1) xor (parity to x in g2)."""
    if g1 is g2 or (isinstance(g1, Obstacle) and isinstance(g2, Obstacle)
                    and g1.id == g2.id):
        return frozenset((loop_parity(g1, pi),))
    out = set()
    for rep in obstacles_intersect(g1, g2):
        for a in parity_to_point(g1, rep.point, pi):
            for b in parity_to_point(g2, rep.point, pi):
                out.add(a ^ b)
        if len(out) == 2:
            break
    return frozenset(out)


# ---------------------------------------------------------- validation

def _chain_simple(pts) -> bool:
    n = len(pts) - 1
    for i in range(n):
        if pts[i] == pts[i + 1]:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            reps = _seg_seg(pts[i], pts[i + 1], pts[j], pts[j + 1])
            if not reps:
                continue
            if j == i + 1:
                # neighbours may only share their common vertex
                if len(reps) == 1 and reps[0].point == pts[j]:
                    continue
                return False
            return False
    return True


def validate_instance(inst: Instance) -> None:
    """Reject malformed shapes and obstacles that pass through s or t."""
    if inst.s == inst.t:
        raise InvalidInstance("s and t coincide")
    pi = inst.path
    if pi[0] != inst.s or pi[-1] != inst.t:
        raise InvalidInstance("reference path must run from s to t")
    if len(pi) > 2 and not _chain_simple(pi):
        raise InvalidInstance("reference path is not simple")
    ids = set()
    for ob in inst.obstacles:
        if ob.id in ids:
            raise InvalidInstance(f"duplicate obstacle id {ob.id}")
        ids.add(ob.id)
        if ob.weight < 0:
            raise InvalidInstance(f"obstacle {ob.id} has negative weight")
        sh = ob.shape
        if isinstance(sh, Segment):
            if sh.a == sh.b:
                raise InvalidInstance(f"obstacle {ob.id} is a degenerate segment")
        elif isinstance(sh, Polyline):
            if len(sh.points) < 2 or not _chain_simple(sh.points):
                raise InvalidInstance(f"obstacle {ob.id} is not a simple polyline")
        elif sh.radius <= 0:
            raise InvalidInstance(f"obstacle {ob.id} has nonpositive radius")
        for q in (inst.s, inst.t):
            if isinstance(sh, Disk):
                bad = _strictly_inside(q, sh.center, sh.radius) is None
            else:
                bad = on_shape(q, sh)
            if bad:
                raise InvalidInstance(f"obstacle {ob.id} passes through s or t")
