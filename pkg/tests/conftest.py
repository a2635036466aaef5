"""Shared corpus fixtures. Session-scoped since feeding graphs is cheap but
generating the large disk lattices is not."""

import pytest

import matchsticks as M


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs of every flavor, small enough for brute-force oracles."""
    graphs = {}
    for k in (1, 2, 3, 5, 7):
        graphs[f"grid{k}"] = M.gen_grid(k)
    for k in (2, 3, 4, 5, 6):
        graphs[f"zono{k}"] = M.gen_zonotope(k)
    for n in (1, 2, 3, 5, 6, 10, 17, 20, 30):
        graphs[f"tf{n}"] = M.gen_triangle_free(n)
    graphs["strip1"] = M.gen_rhombus_strip(1, 0.7854)
    graphs["strip3"] = M.gen_rhombus_strip(3, 0.05)
    graphs["strip5"] = M.gen_rhombus_strip(5, 0.3, tilt=0.1)
    return graphs


@pytest.fixture(scope="session")
def disk_corpus():
    """Disk lattices used by several modules (largest component, with params)."""
    out = {}
    for (r, n) in [(2, 300), (2.5, 300), (3, 400), (4, 500)]:
        g, params = M.gen_disk_lattice(r, n)
        out[(r, n)] = (M.largest_component(g), params)
    return out


@pytest.fixture(scope="session")
def reduced_disk_corpus(disk_corpus):
    out = {}
    for (r, n), (g, params) in disk_corpus.items():
        tr = M.reduce_graph(g, r)
        out[(r, n)] = tr.after_fat_rhombi
    return out
