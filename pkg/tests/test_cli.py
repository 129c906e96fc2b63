import pytest

from tricolor.cli import main
from tricolor.graphio import parse, parse_coloring, serialize
from tricolor.instances import cube_graph, cycle_graph
from tricolor.oracle import SimpleGraph, facial_cycles, is_proper


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.graph"
    path.write_text(serialize(cube_graph()))
    return path


def test_color_then_check(tmp_path, cube_file, capsys):
    assert main(["color", "--validate", "--stats", str(cube_file)]) == 0
    out = capsys.readouterr()
    coloring = parse_coloring(out.out)
    assert len(coloring) == 8 and set(coloring.values()) <= {0, 1, 2}
    assert "pops=" in out.err
    colfile = tmp_path / "cube.col"
    colfile.write_text(out.out)
    assert main(["check", str(cube_file), str(colfile)]) == 0
    sg = SimpleGraph.from_plane_graph(cube_graph())
    assert is_proper(sg, coloring)


def test_check_rejects_corrupted(tmp_path, cube_file, capsys):
    main(["color", str(cube_file)])
    coloring = parse_coloring(capsys.readouterr().out)
    u, w, _ = next(cube_graph().edges())
    coloring[u] = coloring[w]
    bad = tmp_path / "bad.col"
    bad.write_text("".join(f"{v} {c}\n" for v, c in coloring.items()))
    assert main(["check", str(cube_file), str(bad)]) == 1


def test_precolor_flow(tmp_path, cube_file, capsys):
    g = cube_graph()
    cyc = next(vs for vs, _ in facial_cycles(g) if len(vs) == 4)
    phi = dict(zip(cyc, (0, 1, 0, 1)))
    pre = tmp_path / "pre.col"
    pre.write_text("".join(f"{v} {c}\n" for v, c in phi.items()))
    assert main(["color", "--precolor", str(pre), str(cube_file)]) == 0
    coloring = parse_coloring(capsys.readouterr().out)
    assert all(coloring[v] == phi[v] for v in cyc)
    sg = SimpleGraph.from_plane_graph(cube_graph())
    assert is_proper(sg, coloring)


def test_precolor_improper_exits_one(tmp_path, cube_file, capsys):
    g = cube_graph()
    cyc = next(vs for vs, _ in facial_cycles(g) if len(vs) == 4)
    pre = tmp_path / "pre.col"
    pre.write_text("".join(f"{v} 0\n" for v in cyc))
    assert main(["color", "--precolor", str(pre), str(cube_file)]) == 1
    assert "error:" in capsys.readouterr().err


def test_gen_writes_parseable_graph(tmp_path, capsys):
    out = tmp_path / "g.graph"
    assert main(["gen", "--kind", "quad", "--size", "30", "--seed", "4",
                 "--out", str(out)]) == 0
    g = parse(out.read_text())
    assert g.n_alive == 30


def test_gen_deterministic(capsys):
    assert main(["gen", "--kind", "augmented", "--size", "20", "--seed", "1"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--kind", "augmented", "--size", "20", "--seed", "1"]) == 0
    assert capsys.readouterr().out == first


def test_oracle_command(tmp_path, capsys):
    path = tmp_path / "c5.graph"
    path.write_text(serialize(cycle_graph(5)))
    assert main(["oracle", str(path)]) == 0
    coloring = parse_coloring(capsys.readouterr().out)
    sg = SimpleGraph.from_plane_graph(cycle_graph(5))
    assert is_proper(sg, coloring)


def test_validate_catches_triangle(tmp_path, capsys):
    path = tmp_path / "k4.graph"
    from tricolor.instances import graph_from_faces
    k4 = graph_from_faces([(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    path.write_text(serialize(k4))
    assert main(["color", "--validate", str(path)]) == 1


def test_bench_rows(capsys):
    assert main(["bench", "--kind", "grid", "--sizes", "100,200,400",
                 "--seed", "0", "--repeats", "2"]) == 0
    rows = [l for l in capsys.readouterr().out.splitlines()
            if l and not l.startswith("#")]
    assert len(rows) == 3
    ns = [int(r.split("\t")[0]) for r in rows]
    assert ns == sorted(ns)
    assert all(len(r.split("\t")) == 9 for r in rows)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["color"])
    assert exc.value.code == 2


def test_missing_file_exit_one(capsys):
    assert main(["color", "/nonexistent/xyz.graph"]) == 1
