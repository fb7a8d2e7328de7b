"""Random instance generators used by tests, the CLI and the benchmarks.

Small instances sit on an integer grid so that shared endpoints, collinear
overlaps and touches show up often.  Part of each instance is a noisy ring
around s, which makes separation common.
"""
import math
import random
from fractions import Fraction

from .errors import InvalidInstance
from .geometry import (Circle, Disk, Instance, Obstacle, P, Segment,
                       validate_instance)
from .reductions import DirectedGraph

S_DEFAULT = P(Fraction(1, 2), Fraction(1, 3))
T_DEFAULT = P(9, Fraction(1, 3))


def random_weight(rng, mode):
    if mode == "unit":
        return Fraction(1)
    q = rng.choice((1, 2, 3, 7))
    return Fraction(rng.randint(q, 100 * q), q)


def _ring(rng, m, axis_aligned):
    if axis_aligned:
        x0, x1 = -rng.randint(1, 3), rng.randint(2, 4)
        y0, y1 = -rng.randint(1, 3), rng.randint(1, 3)
        ext = [rng.randint(0, 1) for _ in range(4)]
        return [((x0 - ext[0], y0), (x1 + ext[1], y0)),
                ((x1, y0 - ext[2]), (x1, y1)),
                ((x1 + ext[3], y1), (x0, y1)),
                ((x0, y1), (x0, y0))][:m]
    phase = rng.random() * 2 * math.pi
    pts = []
    for i in range(m):
        ang = phase + 2 * math.pi * i / m + rng.uniform(-0.3, 0.3)
        r = rng.uniform(2, 4)
        pts.append((round(0.5 + r * math.cos(ang)), round(0.33 + r * math.sin(ang))))
    segs = []
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        if rng.random() < 0.5:
            # overshoot the corner a little so neighbours cross
            b = (b[0] + (b[0] - a[0]) // 3, b[1] + (b[1] - a[1]) // 3)
        segs.append((a, b))
    return segs


def _random_seg(rng, axis_aligned, box=5):
    if axis_aligned:
        x, y = rng.randint(-box, box), rng.randint(-box, box)
        L = rng.randint(1, 2 * box)
        if rng.random() < 0.5:
            return ((x, y), (x + L, y))
        return ((x, y), (x, y + L))
    return ((rng.randint(-box, box), rng.randint(-box, box)),
            (rng.randint(-box, box), rng.randint(-box, box)))


def random_segment_instance(n, seed, weights="rational", axis_aligned=False,
                            s=S_DEFAULT, t=T_DEFAULT) -> Instance:
    """n segment obstacles: a partial ring around s plus random clutter."""
    rng = random.Random(seed)
    ring = _ring(rng, rng.randint(3, 4) if n >= 3 else n, axis_aligned)
    raw = list(ring[:n])
    obs = []
    while len(obs) < n:
        if raw:
            a, b = raw.pop(0)
        else:
            a, b = _random_seg(rng, axis_aligned)
        if a == b:
            continue
        ob = Obstacle(len(obs), random_weight(rng, weights), Segment(P(*a), P(*b)))
        try:
            validate_instance(Instance((ob,), s, t))
        except InvalidInstance:
            continue
        obs.append(ob)
    return Instance(tuple(obs), s, t)


def random_disk_instance(n, seed, weights="unit", s=S_DEFAULT, t=T_DEFAULT,
                         circles=False) -> Instance:
    """Disks (or circles) of rational radius, most of them on a ring around s."""
    rng = random.Random(seed)
    cls = Circle if circles else Disk
    obs = []
    while len(obs) < n:
        if rng.random() < 0.7:
            ang = rng.random() * 2 * math.pi
            r = rng.uniform(2, 3.5)
            c = (Fraction(round(2 * (0.5 + r * math.cos(ang))), 2),
                 Fraction(round(2 * (0.33 + r * math.sin(ang))), 2))
        else:
            c = (Fraction(rng.randint(-10, 10), 2), Fraction(rng.randint(-10, 10), 2))
        rad = Fraction(rng.randint(2, 8), 4)
        ob = Obstacle(len(obs), random_weight(rng, weights), cls(P(*c), rad))
        try:
            validate_instance(Instance((ob,), s, t))
        except InvalidInstance:
            continue
        obs.append(ob)
    return Instance(tuple(obs), s, t)


def random_axis_instance(n, seed) -> Instance:
    """Unit-weight axis-aligned segments in the unit square at constant density.

    Segment lengths scale like 1/sqrt(n), so the expected number of
    intersections per segment does not grow with n.
    """
    rng = random.Random(seed)
    den = 1 << 20
    L = 3.0 / math.sqrt(n)
    s = P(Fraction(1, 2) + Fraction(1, 3 * den), Fraction(1, 2) + Fraction(1, 7 * den))
    t = P(Fraction(3, 2), s.y)
    obs = []
    while len(obs) < n:
        x = Fraction(rng.randrange(den), den)
        y = Fraction(rng.randrange(den), den)
        ln = Fraction(int(L * den * rng.uniform(0.5, 1.5)) + 1, den)
        if rng.random() < 0.5:
            a, b = P(x, y), P(x + ln, y)
        else:
            a, b = P(x, y), P(x, y + ln)
        obs.append(Obstacle(len(obs), 1, Segment(a, b)))
    return Instance(tuple(obs), s, t)


def random_digraph(seed, n_max=8, m_max=20, w_max=10):
    """Directed graph without self-loops: n <= n_max, m <= m_max, integer weights."""
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    rng.shuffle(pairs)
    m = rng.randint(1, min(m_max, len(pairs)))
    return DirectedGraph(n, [(u, v, rng.randint(1, w_max)) for u, v in sorted(pairs[:m])])
