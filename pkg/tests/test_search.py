import math

import pytest

import matchsticks as M
from matchsticks.errors import BudgetExceeded
from matchsticks.search import (CandidateFamily, enumerate_zonotope_tilings,
                                max_edges_over_family)


def test_lattice_window_n4():
    res = max_edges_over_family(CandidateFamily("lattice_window", window=4), 4)
    assert res.best_e == 4
    assert res.exhaustive
    assert res.witness.n == 4 and res.witness.e == 4


def test_lattice_window_n9_matches_conjecture():
    res = max_edges_over_family(CandidateFamily("lattice_window", window=5), 9)
    assert res.best_e == 12 == M.conjectured_max_edges(9)
    assert res.exhaustive
    # the witness must revalidate from its serialized form
    back = M.loads_graph(M.dumps_graph(res.witness))
    rep = M.validate(back, checks={"simple", "unit_lengths", "noncrossing",
                                   "triangle_free"})
    assert rep.ok and back.e == 12


def test_lattice_window_budget_exceeded_carries_best():
    with pytest.raises(BudgetExceeded) as exc:
        max_edges_over_family(CandidateFamily("lattice_window", window=5), 9,
                              budget=1000)
    res = exc.value.result
    assert res is not None
    assert not res.exhaustive
    assert res.best_e <= 12


def test_window_family_monotone_in_n():
    prev = 0
    for n in range(1, 10):
        res = max_edges_over_family(CandidateFamily("lattice_window", window=4), n)
        assert res.best_e >= prev
        prev = res.best_e


def test_zonotope_flips_octagon():
    tilings, complete = enumerate_zonotope_tilings(4, 10000)
    assert complete
    assert len(tilings) == 8
    assert all(t.n == 11 and t.e == 16 for t in tilings)
    res = max_edges_over_family(CandidateFamily("zonotope_flips", k=4), 11)
    assert res.best_e == 16
    assert res.exhaustive


def test_zonotope_flips_hexagon():
    tilings, complete = enumerate_zonotope_tilings(3, 1000)
    assert complete and len(tilings) == 2  # the two tilings of the hexagon
    assert all(t.e == 9 for t in tilings)


def test_augmentation_variants():
    res = max_edges_over_family(CandidateFamily("augmentation_variants"), 18)
    assert res.best_e == M.conjectured_max_edges(18)
    assert res.exhaustive


def test_probe_small():
    rows = M.conjecture_probe(9)
    assert len(rows) == 9
    for row in rows:
        assert row.best_known == row.conjecture, row
        assert row.best_known <= row.upper_bound
        assert row.flags == ()
        assert row.sources["lattice_window"]["exhaustive"] is True


def test_probe_values():
    rows = {r.n: r for r in M.conjecture_probe(4)}
    assert rows[4].best_known == 4
    assert rows[4].conjecture == 4
    assert rows[4].upper_bound == pytest.approx(8 - (math.sqrt(2) / 5) * 2)


def test_search_result_json_roundtrip():
    res = max_edges_over_family(CandidateFamily("lattice_window", window=4), 6)
    doc = res.to_json_dict()
    back = M.loads_graph(__import__("json").dumps(doc["witness"]))
    assert back.n == res.n and back.e == res.best_e
