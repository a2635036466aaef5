import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import matchsticks as M
from matchsticks.errors import GraphFormatError, UnknownEdge
from matchsticks.graph import MatchstickGraph, dumps_graph, loads_graph


def unit_square():
    return MatchstickGraph([(0, 0), (1, 0), (1, 1), (0, 1)],
                           [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_structural_invariants():
    with pytest.raises(ValueError):
        MatchstickGraph([(0, 0), (1, 0)], [(0, 0)])   # self loop
    with pytest.raises(ValueError):
        MatchstickGraph([(0, 0), (1, 0)], [(0, 1), (1, 0)])  # duplicate
    with pytest.raises(ValueError):
        MatchstickGraph([(0, 0)], [(0, 1)])           # out of range
    with pytest.raises(ValueError):
        MatchstickGraph([(0, 0), (float("nan"), 0)], [])


def test_validate_unit_square_all_pass():
    rep = M.validate(unit_square())
    assert rep.ok
    assert rep.status["triangle_free"] == "pass"
    assert rep.status["disk_contained"] == "skipped"


def test_validate_triangle_fails_triangle_free():
    tri = MatchstickGraph([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)],
                          [(0, 1), (1, 2), (0, 2)])
    rep = M.validate(tri)
    assert rep.status["triangle_free"] == "fail"
    assert rep.status["unit_lengths"] == "pass"
    assert rep.status["noncrossing"] == "pass"
    assert any(c == "triangle_free" for (c, _d) in rep.violations)


def test_validate_crossing_segments():
    g = MatchstickGraph([(0, 0), (1, 0), (0.5, -0.5), (0.5, 0.5)],
                        [(0, 1), (2, 3)])
    rep = M.validate(g)
    assert rep.status["noncrossing"] == "fail"


def test_validate_coincident_vertices():
    g = MatchstickGraph([(0, 0), (1, 0), (0, 0)], [(0, 1)])
    rep = M.validate(g)
    assert rep.status["simple"] == "fail"


def test_degree_profile_examples():
    single = MatchstickGraph([(0, 0), (1, 0)], [(0, 1)])
    assert M.degree_profile(single) == ({1: 2}, True)
    # closed form for a k x k grid: 4 corners, 4(k-2) sides, (k-2)^2 interior
    k = 7
    expect = {2: 4, 3: 4 * (k - 2), 4: (k - 2) * (k - 2)}
    assert M.degree_profile(M.gen_grid(k)) == (expect, True)
    two = MatchstickGraph([(0, 0), (1, 0), (5, 5), (6, 5)], [(0, 1), (2, 3)])
    assert M.degree_profile(two) == ({1: 4}, False)


def test_remove_edges():
    sq = unit_square()
    path = M.remove_edges(sq, [0])
    assert path.e == 3 and path.n == 4
    with pytest.raises(UnknownEdge):
        M.remove_edges(sq, [99])
    tri = MatchstickGraph([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)],
                          [(0, 1), (1, 2), (0, 2)])
    cut = M.remove_edges(tri, [0])
    assert M.validate(cut).status["triangle_free"] == "pass"
    # grid(3) loses its 4 cell-top edges (horizontal, y in {1, 2}) and stays valid
    g3 = M.gen_grid(3)
    assert g3.e == 12
    tops = [k for k, (i, j) in enumerate(g3.edges)
            if g3.vertices[i][1] == g3.vertices[j][1]
            and g3.vertices[i][1] in (1.0, 2.0)]
    assert len(tops) == 4
    cut = M.remove_edges(g3, tops)
    assert cut.e == 8
    assert M.validate(cut, checks={"simple", "unit_lengths", "noncrossing"}).ok


def test_validate_monotone_under_removal(small_corpus):
    # connectivity is exempt: removing edges can disconnect a graph
    checks = {"simple", "unit_lengths", "noncrossing", "triangle_free"}
    g = small_corpus["zono4"]
    before = M.validate(g, checks=checks)
    assert before.ok
    cut = M.remove_edges(g, [0, 3, 7])
    after = M.validate(cut, checks=checks)
    for name in checks:
        assert not (before.status[name] == "pass" and after.status[name] == "fail")


def test_roundtrip_bitexact_corpus(small_corpus):
    for name, g in small_corpus.items():
        text = dumps_graph(g)
        back = loads_graph(text)
        assert back == g, name
        assert dumps_graph(back) == text, name


@settings(max_examples=80)
@given(st.lists(st.tuples(
    st.floats(allow_nan=False, allow_infinity=False, width=64),
    st.floats(allow_nan=False, allow_infinity=False, width=64)),
    min_size=1, max_size=6, unique=True))
def test_roundtrip_bitexact_random_coords(coords):
    edges = [(i, i + 1) for i in range(len(coords) - 1)]
    g = MatchstickGraph(coords, edges)
    back = loads_graph(dumps_graph(g))
    assert back.vertices == g.vertices
    assert back.edges == g.edges


def test_format_contract():
    g, _ = M.gen_disk_lattice(3, 40)
    doc = json.loads(dumps_graph(g))
    assert list(doc) == ["version", "disk", "vertices", "edges"]
    assert doc["version"] == 1
    assert doc["disk"]["radius"] == 3.0
    assert all(i < j for (i, j) in doc["edges"])
    assert doc["edges"] == sorted(doc["edges"])


def test_load_rejects_unknown_and_malformed():
    good = dumps_graph(unit_square())
    doc = json.loads(good)
    doc["extra"] = 1
    with pytest.raises(GraphFormatError):
        loads_graph(json.dumps(doc))
    doc = json.loads(good)
    doc["version"] = 2
    with pytest.raises(GraphFormatError):
        loads_graph(json.dumps(doc))
    doc = json.loads(good)
    doc["edges"] = [[1, 0]]
    with pytest.raises(GraphFormatError):
        loads_graph(json.dumps(doc))
    doc = json.loads(good)
    doc["edges"] = [[0, 3], [0, 1]]
    with pytest.raises(GraphFormatError):
        loads_graph(json.dumps(doc))
    with pytest.raises(GraphFormatError):
        loads_graph("[1, 2]")


def test_components_and_largest():
    g, params = M.gen_disk_lattice(3, 40)
    comps = M.connected_components(g)
    assert len(comps) == 1 + params.padding_points
    main = M.largest_component(g)
    assert main.n == params.lattice_points
    assert main.e == g.e


def test_save_load_file(tmp_path):
    g = unit_square()
    path = tmp_path / "sq.json"
    M.save_graph(g, path)
    assert M.load_graph(path) == g
