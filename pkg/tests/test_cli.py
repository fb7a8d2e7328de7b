import json
import xml.dom.minidom
from fractions import Fraction as F

import pytest

from conftest import FIXTURES
from stsep import io
from stsep.cli import main, pick_algo
from stsep.errors import InvalidInstance
from stsep.geometry import Circle, Disk, Instance, Obstacle, P, Polyline, Segment
from stsep.randgen import random_disk_instance, random_segment_instance
from stsep.svg import render_svg

TRI = str(FIXTURES / "triangle.json")
TRI_GRAPH = str(FIXTURES / "triangle_graph.json")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------- file formats

def test_round_trip_all_shapes():
    obs = (Obstacle(0, F(7, 3), Segment(P(F(1, 3), 0), P(2, F(-5, 7)))),
           Obstacle(1, 1, Polyline((P(0, 5), P(1, 6), P(2, 5)))),
           Obstacle(2, F(1, 2), Circle(P(20, 20), F(3, 2))),
           Obstacle(5, 4, Disk(P(-20, 20), 2)))
    inst = Instance(obs, P(F(-1, 2), F(1, 3)), P(9, F(1, 3)),
                    (P(F(-1, 2), F(1, 3)), P(3, 10), P(9, F(1, 3))))
    text = io.dumps(io.instance_to_dict(inst))
    assert io.instance_from_dict(io.loads(text)) == inst


def test_round_trip_random_fixtures():
    for seed in range(20):
        for inst in (random_segment_instance(8, seed), random_disk_instance(6, seed)):
            assert io.instance_from_dict(io.loads(io.dumps(io.instance_to_dict(inst)))) == inst


def test_decimals_are_exact():
    d = io.loads('{"s": ["0.1", 0.2], "t": [3, "1/3"], "obstacles": []}')
    inst = io.instance_from_dict(d)
    assert inst.s == P(F(1, 10), F(1, 5))
    assert inst.t == P(3, F(1, 3))


def test_bad_instances_raise():
    with pytest.raises(InvalidInstance):
        io.loads("{")
    with pytest.raises(InvalidInstance):
        io.instance_from_dict({"s": [0, 0]})
    with pytest.raises(InvalidInstance):
        io.instance_from_dict({"s": [0, 0], "t": [1, 1], "obstacles": [
            {"id": 0, "kind": "blob", "geometry": []}]})
    with pytest.raises(InvalidInstance):
        io.instance_from_dict({"schema_version": 99, "s": [0, 0], "t": [1, 1], "obstacles": []})


def test_arrangement_round_trip():
    d = {"vertices": [[-1, -1], [1, -1], [1, 1], [-1, 1]],
         "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
         "obstacles": [{"id": 0, "weight": "2", "vertex_ids": [0, 1, 2, 3]}],
         "s": [0, 0], "t": [5, 0]}
    pg, sigma, w = io.arrangement_from_dict(d)
    again = io.arrangement_from_dict(io.loads(io.dumps(io.arrangement_to_dict(pg, sigma, w))))
    assert again[0].edges == pg.edges and again[1] == sigma and again[2] == w


def test_cover_graph_json(triangle):
    from stsep.cover import build_cover_graph
    text = io.dumps(build_cover_graph(triangle).to_json())
    assert json.loads(text)["vertices"][0] == [0, 0]


# ---------------------------------------------------------------------- solve

def test_solve_triangle_dijkstra(capsys):
    code, out, _ = run(capsys, "solve", "--input", TRI, "--algo", "dijkstra")
    assert code == 0
    res = json.loads(out)
    assert res["weight"] == "3" and res["feasible"] and res["obstacle_ids"] == [0, 1, 2]
    assert res["weight_decimal"] == 3.0 and res["wall_time_ms"] >= 0


def test_solve_all_algorithms_agree(capsys):
    weights = set()
    for algo in ("auto", "dijkstra", "bfs", "seidel", "si", "biclique", "arrangement"):
        code, out, _ = run(capsys, "solve", "--input", TRI, "--algo", algo)
        assert code == 0
        weights.add(json.loads(out)["weight"])
    assert weights == {"3"}


def test_solve_malformed(capsys):
    code, _, err = run(capsys, "solve", "--input", str(FIXTURES / "malformed.json"))
    assert code == 2 and "error" in err


def test_solve_missing_file(capsys):
    assert run(capsys, "solve", "--input", "/nonexistent.json")[0] == 2


def test_solve_capability_error(tmp_path, capsys):
    p = tmp_path / "w.json"
    inst = random_segment_instance(5, 1)  # rational weights
    p.write_text(io.dumps(io.instance_to_dict(inst)))
    assert run(capsys, "solve", "--input", str(p), "--algo", "bfs")[0] == 3
    p2 = tmp_path / "c.json"
    p2.write_text(io.dumps(io.instance_to_dict(random_disk_instance(4, 2, circles=True))))
    assert run(capsys, "solve", "--input", str(p2), "--algo", "arrangement")[0] == 3


def test_solve_strict_infeasible(tmp_path, capsys):
    d = json.loads((FIXTURES / "triangle.json").read_text())
    d["obstacles"] = d["obstacles"][:2]
    p = tmp_path / "open.json"
    p.write_text(json.dumps(d))
    assert run(capsys, "solve", "--input", str(p))[0] == 0
    code, out, _ = run(capsys, "solve", "--input", str(p), "--strict")
    assert code == 1 and json.loads(out)["feasible"] is False


def test_solve_arrangement_file(tmp_path, capsys):
    d = {"vertices": [[-1, -1], [1, -1], [1, 1], [-1, 1]],
         "edges": [[0, 1], [1, 2], [2, 3], [0, 3]],
         "obstacles": [{"id": 0, "weight": "2", "vertex_ids": [0, 1, 2, 3]}],
         "s": 1, "t": 0}
    p = tmp_path / "arr.json"
    p.write_text(json.dumps(d))
    code, out, _ = run(capsys, "solve", "--input", str(p))
    assert code == 0 and json.loads(out)["algorithm"] == "arrangement"
    assert json.loads(out)["weight"] == "2"
    assert run(capsys, "solve", "--input", str(p), "--algo", "bfs")[0] == 3


def test_solve_writes_svg(tmp_path, capsys):
    svg, out = tmp_path / "t.svg", tmp_path / "r.json"
    code, _, _ = run(capsys, "solve", "--input", TRI, "--output", str(out), "--svg", str(svg))
    assert code == 0 and json.loads(out.read_text())["weight"] == "3"
    doc = xml.dom.minidom.parse(str(svg))
    lines = doc.getElementsByTagName("line")
    assert len(lines) == 3


def test_auto_picks():
    tri = io.load_instance(TRI)
    assert pick_algo(tri) == "si"
    assert pick_algo(random_segment_instance(5, 0)) == "dijkstra"
    assert pick_algo(random_disk_instance(5, 0, circles=True)) == "dijkstra"


# ----------------------------------------------------------------------- svg

def test_svg_structure():
    inst = random_disk_instance(5, 3)
    text = render_svg(inst, chosen=[inst.obstacles[0].id])
    doc = xml.dom.minidom.parseString(text)
    shapes = [e for e in doc.getElementsByTagName("circle") if e.getAttribute("data-id")]
    assert len(shapes) == 5
    widths = {e.getAttribute("data-id"): float(e.getAttribute("stroke-width")) for e in shapes}
    first = str(inst.obstacles[0].id)
    others = [w for k, w in widths.items() if k != first]
    assert widths[first] == pytest.approx(2 * others[0])


def test_svg_viewport_margin():
    inst = Instance((Obstacle(0, 1, Segment(P(0, 0), P(10, 0))),), P(0, 5), P(10, 5))
    doc = xml.dom.minidom.parseString(render_svg(inst))
    x, y, w, h = map(float, doc.documentElement.getAttribute("viewBox").split())
    assert (x, w) == pytest.approx((-0.5, 11.0))
    assert (y, h) == pytest.approx((-0.25, 5.5))


# --------------------------------------------------------------------- verify

def test_verify_triangle(capsys):
    code, out, _ = run(capsys, "verify", "--input", TRI)
    assert code == 0
    assert "MISMATCH" not in out and "dijkstra" in out


def test_verify_too_large(tmp_path, capsys):
    p = tmp_path / "big.json"
    p.write_text(io.dumps(io.instance_to_dict(random_segment_instance(20, 0))))
    assert run(capsys, "verify", "--input", str(p), "--max-n", "12")[0] == 3


def test_verify_batch(capsys, monkeypatch):
    monkeypatch.setenv("STSEP_THREADS", "1")
    code, out, _ = run(capsys, "verify", "--seeds", "200", "--n", "6")
    assert code == 0
    assert "200 seeds" in out


def test_bad_thread_setting(capsys, monkeypatch):
    monkeypatch.setenv("STSEP_THREADS", "many")
    assert run(capsys, "verify", "--seeds", "2", "--n", "4")[0] == 2


# ------------------------------------------------------------------------ gen

def test_gen_random_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run(capsys, "gen", "random", "--kind", "segments", "--n", "8",
                   "--seed", "7", "--output", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize("kind", ["segments", "axis", "grid", "disks", "circles"])
def test_gen_random_kinds(kind, capsys):
    args = ["gen", "random", "--kind", kind, "--n", "6"]
    if kind == "grid":
        args += ["--weights", "unit"]
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert len(io.instance_from_dict(io.loads(out)).obstacles) == 6


def test_gen_reduce_triangle(tmp_path, capsys):
    p = tmp_path / "r.json"
    assert run(capsys, "gen", "reduce", "--graph", TRI_GRAPH, "--k", "3",
               "--variant", "segments", "--output", str(p))[0] == 0
    assert io.load(p)["reduction"]["offset"] == "9"
    code, out, _ = run(capsys, "solve", "--input", str(p), "--algo", "dijkstra")
    assert json.loads(out)["weight"] == "12"


def test_gen_reduce_self_loop(capsys):
    code, _, _ = run(capsys, "gen", "reduce", "--graph",
                     str(FIXTURES / "selfloop_graph.json"), "--k", "3")
    assert code == 2


def test_gen_bad_parameters(capsys):
    assert run(capsys, "gen", "random", "--n", "0")[0] == 2
    assert run(capsys, "gen", "reduce", "--k", "3")[0] == 2
    assert run(capsys, "gen", "random", "--kind", "blobs")[0] == 2


# ---------------------------------------------------------------------- bench

def test_bench_zero_repeats(capsys):
    assert run(capsys, "bench", "--suite", "weighted", "--repeats", "0")[0] == 2


def test_bench_reports_exponent(tmp_path, capsys):
    p = tmp_path / "b.json"
    code, out, _ = run(capsys, "bench", "--suite", "arrangement", "--sizes", "2,3",
                       "--repeats", "1", "--json", str(p))
    assert code == 0 and "exponent" in out
    rep = json.loads(p.read_text())
    assert set(rep["results"]["arrangement"]["median_s"]) == {"2", "3"}


def test_bench_unweighted_medians_grow(capsys):
    code, out, _ = run(capsys, "bench", "--suite", "unweighted", "--sizes", "100,400,800",
                       "--repeats", "3")
    assert code == 0
    meds = [float(line.split()[-1]) for line in out.splitlines()
            if line.startswith("si ") and "exponent" not in line]
    assert meds == sorted(meds)
