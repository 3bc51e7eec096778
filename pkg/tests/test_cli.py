import io

import pytest

from bandcube import cli
from bandcube.construction import parse_representation
from bandcube.graph import parse_graph, parse_ordering
from bandcube.orderings import ArcModel, parse_arcs, parse_caterpillar, parse_orientation, write_arcs

C4 = "n 4\n1 2\n2 3\n3 4\n4 1\n"


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return make


def run(argv, capsys):
    status = cli.main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_pipeline_c4(files, capsys):
    status, out, _ = run(["pipeline", "--input", files("c4.txt", C4), "--strategy", "heuristic"], capsys)
    assert status == 0
    assert "representation n 4 width 2 layers 3" in out
    assert "passed true" in out


def test_pipeline_is_byte_deterministic(files, capsys):
    argv = ["pipeline", "--input", files("c4.txt", C4), "--strategy", "heuristic", "--seed", "5"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_pipeline_exit_follows_verification(files, capsys, monkeypatch):
    real = cli.build_representation

    def broken(g, ordering):
        rep = real(g, ordering)
        return rep.without_layer(rep.layers[-1].index)

    monkeypatch.setattr(cli, "build_representation", broken)
    status, out, _ = run(["pipeline", "--input", files("c4.txt", C4)], capsys)
    assert status == 1
    assert "passed false" in out


def test_bound_circular_arc(files, capsys):
    model = ArcModel(10, ((6, 1), (5, 7), (8, 3), (9, 0), (2, 4)))
    status, out, _ = run(["bound", "--strategy", "circular-arc", "--arcs", files("a.txt", write_arcs(model))],
                         capsys)
    assert status == 0
    assert "max_degree 3" in out
    assert "dims 5 <= 7 ok" in out
    assert out.endswith("bound holds\n")


def test_verify_missing_layer(files, capsys, tmp_path):
    g = files("c4.txt", C4)
    order = files("o.txt", "order 1 2 4 3\n")
    rep_path = str(tmp_path / "rep.txt")
    assert cli.main(["construct", "--input", g, "--strategy", "file", "--ordering", order,
                     "--output", rep_path]) == 0
    text = open(rep_path).read()
    cut = text.split("layer 2 ")[0].replace("layers 3", "layers 2")
    status, out, _ = run(["verify", "--input", g, "--representation", files("cut.txt", cut)], capsys)
    assert status == 1
    assert "extra_edges 1 2-4" in out
    status, out, _ = run(["verify", "--input", g, "--representation", rep_path], capsys)
    assert status == 0 and out.startswith("passed true")


def test_order_and_construct_outputs(files, capsys):
    g = files("c4.txt", C4)
    status, out, _ = run(["order", "--input", g, "--strategy", "exact"], capsys)
    assert status == 0 and out.endswith("width 2\n")
    parse_ordering(out)
    status, out, _ = run(["construct", "--input", g, "--strategy", "exact"], capsys)
    assert parse_representation(out).dims == 3
    status, out, _ = run(["construct", "--input", g, "--strategy", "exact", "--cubes"], capsys)
    assert out.startswith("cubes n 4 k 3\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["order", "--strategy", "heuristic"],
        ["order", "--input", "INPUT", "--strategy", "file"],
        ["order", "--input", "INPUT", "--strategy", "cocomparability"],
        ["order", "--input", "INPUT", "--strategy", "atfree"],
        ["order", "--strategy", "circular-arc"],
        ["order", "--input", "/nonexistent/graph.txt"],
    ],
)
def test_missing_inputs_exit_2(files, capsys, argv):
    argv = [files("c4.txt", C4) if a == "INPUT" else a for a in argv]
    status, _, err = run(argv, capsys)
    assert status == 2
    assert err.startswith("error ") and err.count("\n") == 1


def test_parse_error_exit_2(files, capsys):
    status, _, err = run(["order", "--input", files("bad.txt", "n 3\n1 1\n")], capsys)
    assert status == 2
    assert err == "error validation: line 2: self-loop at vertex 1\n"


def test_size_cap_exit_3(files, capsys):
    status, _, err = run(["order", "--input", files("c4.txt", C4), "--strategy", "exact", "--cap", "3"], capsys)
    assert status == 3 and err.startswith("error size:")
    c5 = "n 5\n1 2\n2 3\n3 4\n4 5\n5 1\n"
    status, _, _ = run(["order", "--input", files("c5.txt", c5), "--strategy", "cocomparability",
                        "--brute-force", "--cap", "2"], capsys)
    assert status == 3


def test_brute_force_orientation(files, capsys):
    status, out, _ = run(["order", "--input", files("c4.txt", C4), "--strategy", "cocomparability",
                          "--brute-force"], capsys)
    assert status == 0 and out == "order 1 2 3 4\nwidth 3\n"
    c5 = "n 5\n1 2\n2 3\n3 4\n4 5\n5 1\n"
    status, _, err = run(["order", "--input", files("c5.txt", c5), "--strategy", "cocomparability",
                          "--brute-force"], capsys)
    assert status == 2 and "co-comparability" in err


def test_arcs_input_must_match(files, capsys):
    model = ArcModel(8, ((0, 3), (2, 5), (6, 7), (1, 4)))
    status, _, _ = run(["order", "--strategy", "circular-arc", "--arcs", files("a.txt", write_arcs(model)),
                        "--input", files("c4.txt", C4)], capsys)
    assert status == 2


@pytest.mark.parametrize("kind", ["random", "path", "cycle", "complete", "star", "bipartite", "banded"])
def test_gen_graphs(kind, capsys):
    status, out, _ = run(["gen", kind, "--n", "6", "--seed", "3"], capsys)
    assert status == 0
    assert parse_graph(out).n == (8 if kind == "bipartite" else 6)


def test_gen_certificates_feed_bound(tmp_path, capsys):
    for kind, flag in (("cocomparability", "--orientation"), ("atfree", "--caterpillar")):
        g, aux = str(tmp_path / f"{kind}.txt"), str(tmp_path / f"{kind}.aux")
        assert cli.main(["gen", kind, "--n", "12", "--density", "0.4", "--seed", "1",
                         "--output", g, "--aux-output", aux]) == 0
        status, out, _ = run(["bound", "--input", g, "--strategy", kind, flag, aux], capsys)
        assert status == 0, out
        assert "bound holds" in out
    parse_orientation(open(tmp_path / "cocomparability.aux").read())
    parse_caterpillar(open(tmp_path / "atfree.aux").read())


def test_gen_arcs(capsys):
    status, out, _ = run(["gen", "arcs", "--n", "7", "--seed", "2"], capsys)
    assert status == 0 and parse_arcs(out).n == 7


def test_gen_needs_aux_output(capsys):
    status, _, err = run(["gen", "atfree", "--n", "5"], capsys)
    assert status == 2 and "--aux-output" in err


def test_bound_for_general_strategy(files, capsys):
    status, out, _ = run(["bound", "--input", files("c4.txt", C4), "--strategy", "exact"], capsys)
    assert status == 0
    assert "width 2 <= 2 ok" in out and "dims 3 <= 3 ok" in out


def test_bound_edgeless(files, capsys):
    status, out, _ = run(["bound", "--input", files("e.txt", "n 3\n"), "--strategy", "heuristic"], capsys)
    assert status == 0 and "bound skipped: edgeless graph" in out


def test_run_config_directly(files):
    buf = io.StringIO()
    cfg = cli.RunConfig(command="order", input=files("c4.txt", C4), strategy="exact")
    assert cli.run(cfg, stdout=buf) == 0
    assert buf.getvalue() == "order 1 2 4 3\nwidth 2\n"
