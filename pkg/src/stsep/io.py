"""JSON file formats: instances, results, plane-graph arrangements, graphs.

Rationals are written as "p/q" strings.  On input, integers, decimal strings,
"p/q" strings and JSON decimals are all read exactly.
"""
import json
from fractions import Fraction

from .arrangement import plane_graph, subgraphs_from_vertex_sets
from .errors import InvalidInstance
from .geometry import (Circle, Disk, Instance, Obstacle, P, Polyline, Segment,
                       coord, make_shape, validate_instance)
from .reductions import DirectedGraph

SCHEMA_VERSION = 1


def loads(text: str):
    # JSON decimals go through their digits, not through binary floats
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise InvalidInstance(f"malformed JSON: {e}") from e


def load(path):
    with open(path, encoding="utf-8") as f:
        return loads(f.read())


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def num(x) -> str:
    return str(Fraction(x))


def _pt(q) -> list:
    return [num(q[0]), num(q[1])]


def _read_pt(v):
    try:
        x, y = v
        return P(x, y)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInstance(f"bad point {v!r}") from e


# ---------------------------------------------------------------- instances

def shape_to_json(shape):
    if isinstance(shape, Segment):
        return [_pt(shape.a), _pt(shape.b)]
    if isinstance(shape, Polyline):
        return [_pt(q) for q in shape.points]
    if isinstance(shape, (Circle, Disk)):
        return [_pt(shape.center), num(shape.radius)]
    raise TypeError(f"unknown shape {shape!r}")


def instance_to_dict(inst: Instance) -> dict:
    d = {
        "schema_version": SCHEMA_VERSION,
        "s": _pt(inst.s),
        "t": _pt(inst.t),
        "obstacles": [{"id": ob.id, "weight": num(ob.weight), "kind": ob.kind,
                       "geometry": shape_to_json(ob.shape)} for ob in inst.obstacles],
    }
    if inst.pi is not None:
        d["pi"] = [_pt(q) for q in inst.pi]
    return d


def instance_from_dict(d: dict, validate: bool = True) -> Instance:
    if not isinstance(d, dict):
        raise InvalidInstance("instance file must hold a JSON object")
    if d.get("schema_version", SCHEMA_VERSION) != SCHEMA_VERSION:
        raise InvalidInstance(f"unsupported schema_version {d.get('schema_version')!r}")
    try:
        s, t = _read_pt(d["s"]), _read_pt(d["t"])
        obs = []
        for o in d["obstacles"]:
            oid = o["id"]
            if not isinstance(oid, int) or isinstance(oid, bool):
                raise InvalidInstance(f"obstacle id {oid!r} is not an integer")
            obs.append(Obstacle(oid, coord(o.get("weight", 1)),
                                make_shape(o["kind"], o["geometry"])))
        pi = d.get("pi")
        if pi is not None:
            pi = tuple(_read_pt(q) for q in pi)
    except InvalidInstance:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInstance(f"bad instance file: {e!r}") from e
    inst = Instance(tuple(obs), s, t, pi)
    if validate:
        validate_instance(inst)
    return inst


def load_instance(path) -> Instance:
    return instance_from_dict(load(path))


def is_arrangement(d) -> bool:
    return isinstance(d, dict) and "vertices" in d and "edges" in d


# ----------------------------------------------------------- arrangements

def _face_or_point(v):
    if isinstance(v, int) and not isinstance(v, bool):
        return v
    return _read_pt(v)


def arrangement_from_dict(d: dict):
    """Plane graph, obstacle subgraphs and weights from the arrangement format."""
    try:
        verts = [_read_pt(v) for v in d["vertices"]]
        edges = [(int(u), int(v)) for u, v in d["edges"]]
        for u, v in edges:
            if not (0 <= u < len(verts) and 0 <= v < len(verts)) or u == v:
                raise InvalidInstance(f"bad edge {u}-{v}")
        sets, weights = {}, {}
        for o in d["obstacles"]:
            sets[o["id"]] = [int(v) for v in o["vertex_ids"]]
            weights[o["id"]] = coord(o.get("weight", 1))
        s, t = _face_or_point(d["s"]), _face_or_point(d["t"])
    except InvalidInstance:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInstance(f"bad arrangement file: {e!r}") from e
    pg = plane_graph(verts, edges, s, t)
    return pg, subgraphs_from_vertex_sets(pg, sets), weights


def arrangement_to_dict(pg, sigma, weights) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "vertices": [_pt(v) for v in pg.vertices],
        "edges": [list(e) for e in pg.edges],
        "obstacles": [{"id": oid, "weight": num(weights[oid]),
                       "vertex_ids": list(sigma.vertices[oid])}
                      for oid in sorted(sigma.vertices)],
        "s": pg.s_face,
        "t": pg.t_face,
    }


# ------------------------------------------------------- results, graphs

def result_to_dict(res, wall_time_ms=None) -> dict:
    d = {
        "feasible": res.feasible,
        "weight": None if res.weight is None else num(res.weight),
        "weight_decimal": None if res.weight is None else float(res.weight),
        "obstacle_ids": list(res.obstacle_ids),
        "algorithm": res.algorithm,
    }
    if wall_time_ms is not None:
        d["wall_time_ms"] = round(wall_time_ms, 3)
    return d


def graph_from_dict(d: dict) -> DirectedGraph:
    try:
        return DirectedGraph(int(d["n"]), [tuple(e) for e in d["edges"]])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInstance(f"bad graph file: {e!r}") from e


def graph_to_dict(G: DirectedGraph) -> dict:
    return {"n": G.n, "edges": [[u, v, num(w)] for u, v, w in G.edges]}
