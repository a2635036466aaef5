import json
import subprocess
import sys

import matchsticks as M
from matchsticks.cli import main
from matchsticks.render import RenderStyle, render_svg


def test_render_unit_square_structure():
    g = M.gen_grid(2)
    svg = render_svg(g)
    assert svg.startswith("<?xml")
    assert 'version="1.1"' in svg
    assert svg.count("<line ") == 4
    assert svg.count("<circle ") == 4
    assert svg.rstrip().endswith("</svg>")


def test_render_deterministic(small_corpus):
    g = small_corpus["zono4"]
    fd = M.enumerate_faces(g)
    style = RenderStyle(color_faces=True)
    assert render_svg(g, fd, style) == render_svg(g, fd, style)


def test_render_dashed_augmentation():
    g, added = M.gen_triangle_free_parts(20)
    style = RenderStyle(dashed_edges=frozenset(added))
    svg = render_svg(g, None, style)
    assert svg.count("stroke-dasharray") == len(added)


def test_render_disk_and_arrows():
    g, params = M.gen_disk_lattice(3, 40)
    style = RenderStyle(show_disk=True,
                        arrows=(((0.0, 0.0), params.a_dir, "a"),
                                ((0.0, 0.0), params.b_dir, "b")))
    svg = render_svg(g, None, style)
    assert svg.count("<circle ") == g.n + 1  # vertices plus the disk outline
    assert svg.count("<polygon ") == 2       # two arrow heads
    assert ">a</text>" in svg and ">b</text>" in svg


def test_render_faces_colored():
    g = M.gen_zonotope(4)
    fd = M.enumerate_faces(g)
    svg = render_svg(g, fd, RenderStyle(color_faces=True))
    assert svg.count("<polygon ") == 6  # one fill per bounded face


def run_cli(*argv):
    return main(list(argv))


def test_cli_generate_analyze_roundtrip(tmp_path, capsys):
    out = tmp_path / "z5.json"
    assert run_cli("generate", "zonotope", "--k", "5", "-o", str(out)) == 0
    rep_path = tmp_path / "rep.json"
    assert run_cli("analyze", str(out), "-o", str(rep_path)) == 0
    doc = json.loads(rep_path.read_text())
    assert (doc["n"], doc["e"], doc["C"], doc["F"]) == (16, 25, 5, 6)


def test_cli_matches_library(tmp_path):
    out = tmp_path / "z.json"
    run_cli("generate", "zonotope", "--k", "4", "-o", str(out))
    g = M.load_graph(out)
    assert g == M.gen_zonotope(4)
    rep_path = tmp_path / "rep.json"
    run_cli("analyze", str(out), "-o", str(rep_path))
    assert json.loads(rep_path.read_text()) == M.analyze(g).to_json_dict()


def test_cli_render(tmp_path):
    gpath = tmp_path / "g.json"
    spath = tmp_path / "g.svg"
    assert run_cli("generate", "grid", "--k", "7", "-o", str(gpath)) == 0
    assert run_cli("render", str(gpath), "-o", str(spath)) == 0
    svg = spath.read_text()
    assert svg.count("<circle ") == 49
    assert svg.count("<line ") == 84
    # byte-identical on repeat
    run_cli("render", str(gpath), "-o", str(tmp_path / "g2.svg"))
    assert (tmp_path / "g2.svg").read_text() == svg


def test_cli_validate_disk_lattice(tmp_path, capsys):
    dpath = tmp_path / "d.json"
    assert run_cli("generate", "disk-lattice", "--r", "3", "--n", "40",
                   "-o", str(dpath)) == 0
    code = run_cli("validate", str(dpath), "--disk", "3", "--triangle-free")
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True


def test_cli_validate_failure_exit_code(tmp_path, capsys):
    bad = M.MatchstickGraph([(0, 0), (0.5, 0)], [(0, 1)])
    p = tmp_path / "bad.json"
    M.save_graph(bad, p)
    assert run_cli("validate", str(p)) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"]["unit_lengths"] == "fail"


def test_cli_reduce_and_extend_path(tmp_path, capsys):
    gpath = tmp_path / "g.json"
    rpath = tmp_path / "r.json"
    tpath = tmp_path / "t.json"
    assert run_cli("generate", "grid", "--k", "3", "-o", str(gpath)) == 0
    assert run_cli("reduce", str(gpath), "--r", "2", "-o", str(rpath)) == 0
    trace = json.loads(capsys.readouterr().out)
    assert trace["e_input"] == 12 and trace["e_output"] == 8
    reduced = M.load_graph(rpath)
    assert reduced.e == 8
    # extend-path on a strip: edge (0, 1) is a bottom chain edge
    spath = tmp_path / "s.json"
    assert run_cli("generate", "strip", "--count", "3", "--theta", "0.05",
                   "--tilt", "0.02", "-o", str(spath)) == 0
    assert run_cli("extend-path", str(spath), "--edge", "0", "1", "--r", "1",
                   "-o", str(tpath)) == 0
    doc = json.loads(tpath.read_text())
    assert doc["status"] == "found_irregular"


def test_cli_search(tmp_path):
    opath = tmp_path / "probe.json"
    assert run_cli("search", "probe", "--n-max", "4", "-o", str(opath)) == 0
    doc = json.loads(opath.read_text())
    assert [row["n"] for row in doc["rows"]] == [1, 2, 3, 4]
    fpath = tmp_path / "fam.json"
    assert run_cli("search", "family", "--name", "lattice_window", "--n", "4",
                   "--budget", "100000", "-o", str(fpath)) == 0
    doc = json.loads(fpath.read_text())
    assert doc["best_e"] == 4


def test_cli_domain_error_json(tmp_path, capsys):
    p = tmp_path / "missing.json"
    assert run_cli("analyze", str(p)) == 1
    err = capsys.readouterr().err
    doc = json.loads(err)
    assert "error" in doc and "message" in doc


def test_cli_usage_error_exit_2():
    assert main(["generate", "grid"]) == 2  # missing required args
    assert main([]) == 2


def test_cli_entrypoint_subprocess(tmp_path):
    out = tmp_path / "g.json"
    proc = subprocess.run(
        [sys.executable, "-m", "matchsticks.cli", "generate", "grid",
         "--k", "2", "-o", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert M.load_graph(out).e == 4
