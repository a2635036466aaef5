import math

import pytest

import matchsticks as M
from matchsticks.errors import Disconnected, NonpositiveRadius
from matchsticks.graph import MatchstickGraph


def unit_square():
    return MatchstickGraph([(0, 0), (1, 0), (1, 1), (0, 1)],
                           [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_boundary_excess_examples():
    assert M.boundary_excess(M.enumerate_faces(unit_square())) == 0
    fd5 = M.enumerate_faces(M.gen_zonotope(5))
    assert M.boundary_excess(fd5) == 6
    fd7 = M.enumerate_faces(M.gen_grid(7))
    # outer walk of grid(k) has 4(k-1) edges
    assert fd7.boundary_length[fd7.outer_face_id] == 24
    assert M.boundary_excess(fd7) == 20


def test_counting_identities_examples():
    z4 = M.gen_zonotope(4)
    ids = M.counting_identities(z4)
    assert ids.incidence_ok and ids.euler_ok and ids.excess_ok
    assert ids.F == 4  # outer 8-walk contributes 8 - 4

    single = MatchstickGraph([(0, 0), (1, 0)], [(0, 1)])
    ids = M.counting_identities(single)
    assert ids.incidence_ok and ids.euler_ok
    assert ids.excess_applicable is False and ids.excess_ok is None

    g2 = M.gen_grid(2)
    ids = M.counting_identities(g2)
    assert ids.incidence_ok and ids.euler_ok and ids.excess_ok
    assert ids.F == 0

    with pytest.raises(Disconnected):
        M.counting_identities(MatchstickGraph([(0, 0), (1, 0), (9, 9), (10, 9)],
                                              [(0, 1), (2, 3)]))


def test_excess_identity_na_for_triangles():
    tri = MatchstickGraph([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)],
                          [(0, 1), (0, 2), (1, 2)])
    ids = M.counting_identities(tri)
    assert ids.excess_applicable is False
    assert ids.incidence_ok and ids.euler_ok


def test_chains_unit_square():
    chains, C = M.rhombus_chains(unit_square())
    assert C == 2
    for c in chains:
        assert len(c.rhombi) == 1
        assert len(c.rail_edges) == 2


def test_chains_grid3():
    g = M.gen_grid(3)
    chains, C = M.rhombus_chains(g)
    assert C == 4
    fd = M.enumerate_faces(g)
    classes = M.classify_faces(g, fd)
    f4 = sum(fc.is_rhombic for fc in classes.values())
    assert f4 == 4 <= math.comb(C, 2)
    # 2 row chains and 2 column chains, 2 cells each
    assert sorted(len(c.rhombi) for c in chains) == [2, 2, 2, 2]


def test_chains_zonotope5_equalities():
    g = M.gen_zonotope(5)
    chains, C = M.rhombus_chains(g)
    assert C == 5
    assert all(len(c.rhombi) == 4 for c in chains)
    ineq = M.chain_inequalities(g)
    assert ineq.rhombic_faces == 10 == ineq.chain_pairs
    assert ineq.pair_bound_ok
    assert ineq.two_c == 10 == ineq.high_face_sum
    assert ineq.five_f == 30
    assert ineq.end_bound_left_ok and ineq.end_bound_right_ok and ineq.in_hypothesis


def test_every_rhombus_in_exactly_two_chains(small_corpus):
    for name, g in small_corpus.items():
        fd = M.enumerate_faces(g)
        classes = M.classify_faces(g, fd)
        chains, C = M.rhombus_chains(g, fd, classes)
        counts = {}
        for c in chains:
            for fid in c.rhombi:
                counts[fid] = counts.get(fid, 0) + 1
        rhombic = {fid for fid, fc in classes.items() if fc.is_rhombic}
        assert set(counts) == rhombic, name
        assert all(v == 2 for v in counts.values()), name


def test_chain_reflection_invariance():
    g = M.gen_zonotope(4)
    _chains, C = M.rhombus_chains(g)
    mirrored = MatchstickGraph([(-x, y) for (x, y) in g.vertices], g.edges)
    _chains2, C2 = M.rhombus_chains(mirrored)
    assert C == C2


def test_chain_inequalities_grid7():
    g = M.gen_grid(7)
    chains, C = M.rhombus_chains(g)
    assert C == 12
    ineq = M.chain_inequalities(g)
    assert (ineq.rhombic_faces, ineq.chain_pairs) == (36, 66)
    assert (ineq.two_c, ineq.high_face_sum, ineq.five_f) == (24, 24, 100)
    assert ineq.pair_bound_ok and ineq.end_bound_left_ok and ineq.end_bound_right_ok


def test_chain_inequalities_out_of_hypothesis_square():
    ineq = M.chain_inequalities(unit_square())
    assert not ineq.in_hypothesis
    assert ineq.two_c == 4 and ineq.high_face_sum == 0
    assert not ineq.end_bound_left_ok  # fails, but out of hypothesis


def test_chain_overlap_check(small_corpus):
    for name in ("grid5", "zono6", "strip5"):
        g = small_corpus.get(name) or (M.gen_grid(5) if name == "grid5"
                                       else M.gen_zonotope(6))
        chains, _C = M.rhombus_chains(g)
        ok, witnesses = M.chain_overlap_check(chains)
        assert ok, (name, witnesses)


def test_zonotope_chain_overlap_is_exactly_one():
    g = M.gen_zonotope(6)
    chains, C = M.rhombus_chains(g)
    assert C == 6
    shared = {}
    for ci, c in enumerate(chains):
        for fid in c.rhombi:
            shared.setdefault(fid, []).append(ci)
    pair_count = {}
    for fid, cs in shared.items():
        key = tuple(sorted(cs))
        pair_count[key] = pair_count.get(key, 0) + 1
    # every chain pair shares exactly one rhombus: C(6,2)=15 pairs, 15 rhombi
    assert len(pair_count) == 15
    assert all(v == 1 for v in pair_count.values())


def test_irregular_edges_strip3():
    g = M.gen_rhombus_strip(3, 0.05)
    fd = M.enumerate_faces(g)
    classes = M.classify_faces(g, fd)
    rep = M.irregular_edge_count(g, fd, classes)
    assert rep.e_star == 8
    assert sum(not b for b in rep.irregular) == 2  # the two interior rails


def test_irregular_edges_square_and_zonotope():
    sq = unit_square()
    fd = M.enumerate_faces(sq)
    rep = M.irregular_edge_count(sq, fd, M.classify_faces(sq, fd))
    assert rep.e_star == 4

    z = M.gen_zonotope(5)
    fd = M.enumerate_faces(z)
    rep = M.irregular_edge_count(z, fd, M.classify_faces(z, fd))
    assert rep.e_star == 10
    assert rep.capacity == 2 * 25 - 4 * 10 == 10
    assert rep.capacity >= rep.e_star


def test_bound_evaluators():
    assert M.max_edges_upper_bound(49) == pytest.approx(96.0201, abs=1e-4)
    assert M.conjectured_max_edges(49) == 86
    assert M.conjectured_max_edges(16) == 25
    assert M.conjectured_max_edges(4) == 4
    assert M.max_edges_upper_bound(4) == pytest.approx(8 - (math.sqrt(2) / 5) * 2)
    assert M.construction_lower_bound(4) == pytest.approx(8 - 2 * math.sqrt(2))


def test_disk_edge_bounds():
    b = M.disk_edge_bounds(10, 100)
    assert b["lower_coeff"] == pytest.approx(1.5)
    b1 = M.disk_edge_bounds(1, 10)
    assert b1["upper_log10_eps2"] == pytest.approx(-8.9345, abs=1e-3)
    assert b1["upper_additive"] == pytest.approx(108.0)
    b3 = M.disk_edge_bounds(3, 10)
    assert b3["upper_additive"] == pytest.approx(8172.0)
    with pytest.raises(NonpositiveRadius):
        M.disk_edge_bounds(0, 5)


def test_conjecture_below_upper_closed_form():
    import numpy as np
    n = np.arange(1, 1_000_001, dtype=np.float64)
    conj = np.floor(2 * n - np.sqrt(2 * n - 1.75) - 1.5)
    upper = 2 * n - (math.sqrt(2) / 5) * np.sqrt(n)
    assert bool(np.all(conj <= upper))


def test_analyze_report_shape():
    rep = M.analyze(M.gen_zonotope(5), r=2.0)
    doc = rep.to_json_dict()
    assert doc["n"] == 16 and doc["e"] == 25
    assert doc["C"] == 5 and doc["F"] == 6
    assert doc["f"] == {"4": 10, "10": 1}
    assert set(doc) >= {"n", "e", "f", "F", "C", "e_star",
                        "identities", "inequalities", "bounds"}
    assert doc["identities"]["euler_formula"] is True
    assert "disk" in doc["bounds"]


def test_chains_satisfy_declarative_definition(small_corpus):
    # rails are translates of the chain direction, consecutive rails bound
    # the recorded rhombic face, and both ends are maximal
    for name in ("grid3", "zono5", "strip3", "tf20"):
        g = small_corpus[name]
        fd = M.enumerate_faces(g)
        classes = M.classify_faces(g, fd)
        chains, _C = M.rhombus_chains(g, fd, classes)
        for ch in chains:
            vx, vy = ch.direction
            assert math.hypot(vx, vy) == pytest.approx(1.0, abs=1e-9)
            for rail in ch.rail_edges:
                (i, j) = g.edges[rail]
                dx = g.vertices[j][0] - g.vertices[i][0]
                dy = g.vertices[j][1] - g.vertices[i][1]
                cross = dx * vy - dy * vx
                assert abs(cross) <= 1e-9, name
            assert len(ch.rail_edges) == len(ch.rhombi) + 1
            for a, fid, b in zip(ch.rail_edges, ch.rhombi, ch.rail_edges[1:]):
                ids = fd.face_edge_ids[fid]
                assert a in ids and b in ids, name
                assert classes[fid].is_rhombic, name
            for end in (ch.rail_edges[0], ch.rail_edges[-1]):
                outside = [f for f in fd.edge_faces[end] if f not in ch.rhombi]
                assert all(not classes[f].is_rhombic for f in outside), name
