from fractions import Fraction as F
from pathlib import Path

import pytest

from stsep.geometry import Circle, Instance, Obstacle, P, Polyline, Segment

FIXTURES = Path(__file__).parent / "fixtures"

S0, T0 = P(0, 0), P(10, F(1, 3))


def seg(a, b):
    return Segment(P(*a), P(*b))


def triangle_obstacles(weights=(1, 1, 1), first_id=0):
    sides = [((-1, -1), (3, -1)), ((3, -1), (0, 3)), ((0, 3), (-1, -1))]
    return [Obstacle(first_id + i, w, seg(a, b)) for i, ((a, b), w) in enumerate(zip(sides, weights))]


def square_obstacles(weights=(1, 1, 1, 1), r=1):
    corners = [(-r, -r), (r, -r), (r, r), (-r, r)]
    return [Obstacle(i, weights[i], seg(corners[i], corners[(i + 1) % 4])) for i in range(4)]


@pytest.fixture
def triangle():
    return Instance(tuple(triangle_obstacles()), S0, T0)


@pytest.fixture
def triangle_with_circle():
    obs = triangle_obstacles() + [Obstacle(3, 5, Circle(P(0, 0), 5))]
    return Instance(tuple(obs), S0, T0)


@pytest.fixture
def square():
    return Instance(tuple(square_obstacles()), S0, T0)


def map_instance(inst, f):
    """Apply a point map to every coordinate of a segment/polyline instance."""
    obs = []
    for ob in inst.obstacles:
        sh = ob.shape
        if isinstance(sh, Segment):
            sh = Segment(f(sh.a), f(sh.b))
        else:
            sh = Polyline(tuple(f(q) for q in sh.points))
        obs.append(Obstacle(ob.id, ob.weight, sh))
    pi = None if inst.pi is None else tuple(f(q) for q in inst.pi)
    return Instance(tuple(obs), f(inst.s), f(inst.t), pi)


def rot345(q, dx=F(7, 3), dy=F(-5, 2)):
    """Rotation with cosine 3/5 followed by a rational translation."""
    return P((3 * q.x - 4 * q.y) / 5 + dx, (4 * q.x + 3 * q.y) / 5 + dy)
