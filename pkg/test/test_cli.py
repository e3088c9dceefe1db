"""
Tests for the command-line front end: outputs, files written and exit codes.
"""

import io

import pytest

from FPT_Triangles import cli
from FPT_Triangles.Graph.graph import TriangleSet, read_edge_list
from FPT_Triangles.errors import UsageError

K4_TEXT = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"
K3_EXPRESSION = "eta(1,2,u(rho(2,1,eta(1,2,u(v(1),v(2)))),v(2)))\n"


@pytest.fixture
def run(tmp_path):
    """
    Runs main() with a config file of its own and returns (exit code, stdout).
    """
    config = tmp_path / "test.cfg"
    config.write_text("[fpt_triangles]\nbench_reps = 1\noracle_limit = 100\n", encoding="utf-8")

    def invoke(*argv):
        out = io.StringIO()
        code = cli.main(["--config", str(config), *argv], out=out)
        return code, out.getvalue()

    return invoke


################################################################################
#
# triangles
#
################################################################################


def test_count_only(run, edge_file):
    code, output = run("triangles", str(edge_file(K4_TEXT, "k4.edges")), "--algo=fes", "--count-only")
    assert code == 0
    assert output == "4\n"


def test_sorted_triangles_use_original_labels(run, edge_file):
    path = edge_file("30 40\n10 20\n20 30\n10 30\n20 40\n")
    code, output = run("triangles", str(path), "--algo=degeneracy", "--sorted")
    assert code == 0
    assert output == "10 20 30\n20 30 40\n"


@pytest.mark.parametrize("algorithm", ["brute", "edge", "degeneracy", "fes", "dtdd", "dtdd-maxdeg", "cograph"])
def test_every_standalone_algorithm(run, edge_file, algorithm):
    code, output = run("triangles", str(edge_file(K4_TEXT)), f"--algo={algorithm}", "--sorted")
    assert code == 0
    assert output.splitlines() == ["0 1 2", "0 1 3", "0 2 3", "1 2 3"]


def test_deletion_set_algorithms(run, edge_file, tmp_path):
    # K3,3 plus an apex 9 joined to all six vertices
    edges = [f"{a} {b}" for a in (0, 1, 2) for b in (3, 4, 5)] + [f"{v} 9" for v in range(6)]
    path = edge_file("\n".join(edges) + "\n")
    apex = tmp_path / "apex.txt"
    apex.write_text("# apex\n9\n", encoding="utf-8")

    for algorithm in ("bipartite", "chordal", "dtdd", "dtdd-maxdeg"):
        extra = ["--d=3"] if algorithm.startswith("dtdd") else []
        if algorithm == "chordal":
            # K3,3 holds chordless 4-cycles
            code, _ = run("triangles", str(path), "--algo=chordal", f"--deletion-set={apex}")
            assert code == 2
            continue
        code, output = run("triangles", str(path), f"--algo={algorithm}", f"--deletion-set={apex}", "--count-only", *extra)
        assert code == 0, algorithm
        assert output == "9\n", algorithm


def test_cliquewidth(run, edge_file, tmp_path):
    expression = tmp_path / "k3.kexpr"
    expression.write_text(K3_EXPRESSION, encoding="utf-8")
    code, output = run("triangles", str(edge_file("0 1\n1 2\n0 2\n")), "--algo=cliquewidth", f"--kexpr={expression}")
    assert code == 0
    assert output == "0 1 2\n"


################################################################################
#
# kernelize, gadget, params
#
################################################################################


def test_kernelize_fes(run, edge_file, tmp_path):
    path = edge_file("0 1\n1 2\n0 2\n", "k3.edges")
    code, output = run("kernelize", str(path), "--param=fes")
    assert code == 0
    assert output.splitlines() == [str(tmp_path / name) for name in ("k3.kernel.edges", "k3.advice.json", "k3.meta")]
    assert "vertices=5 bound=5 ok" in (tmp_path / "k3.meta").read_text(encoding="utf-8")


def test_kernelize_dtdd_with_out(run, edge_file, tmp_path):
    path = edge_file(K4_TEXT)
    deletion_set = tmp_path / "D.txt"
    deletion_set.write_text("0\n1\n", encoding="utf-8")
    code, _ = run("kernelize", str(path), "--param=dtdd", f"--deletion-set={deletion_set}", "--out", str(tmp_path / "kern"))
    assert code == 0
    meta = (tmp_path / "kern.meta").read_text(encoding="utf-8")
    assert "param_in=2" in meta
    assert "d=1" in meta


def test_gadget_verify(run, edge_file, tmp_path):
    path = edge_file("0 1\n1 2\n0 2\n", "k3.edges")
    code, output = run("gadget", str(path), "--verify")
    assert code == 0
    lines = output.splitlines()
    assert lines[0] == str(tmp_path / "k3.gadget.edges")
    assert "diameter_ok: true" in lines
    assert "triangle_equiv: true" in lines

    gadget = read_edge_list(tmp_path / "k3.gadget.edges")
    assert (gadget.n, gadget.m) == (15, 42)


def test_params_k4(run, edge_file):
    code, output = run("params", str(edge_file(K4_TEXT)))
    assert code == 0
    first, second = output.splitlines()
    assert first == "n=4 m=6 delta=3 degeneracy=3 fes=3 bipartite=no chordal=yes cograph=yes"
    assert second.startswith("greedy_d0=3 delta_D0=3 greedy_d1=2")


def test_params_report(p4, c6):
    assert cli.params_report(p4)["fes"] == 0
    assert cli.params_report(p4)["cograph"] == "no"
    report = cli.params_report(c6)
    assert (report["bipartite"], report["fes"]) == ("yes", 1)


################################################################################
#
# bench
#
################################################################################


def test_bench_k4(run, edge_file):
    code, output = run("bench", str(edge_file(K4_TEXT)))
    assert code == 0
    lines = output.splitlines()
    assert lines[0] == "algorithm\ttriangles\tmedian_seconds\treps"
    rows = [line.split("\t") for line in lines[1:] if not line.startswith("#")]
    assert {row[0] for row in rows} == {"brute", "edge", "degeneracy", "fes", "dtdd", "dtdd-maxdeg", "cograph"}
    assert all(row[1] == "4" for row in rows)
    assert "# skipped: bipartite (no deletion set given)" in lines
    assert "# skipped: cliquewidth (no k-expression given)" in lines


def test_bench_detects_a_wrong_algorithm(run, edge_file, mocker):
    mocker.patch.dict(cli.SOLVERS, {"edge": lambda graph, context: TriangleSet()})
    code, _ = run("bench", str(edge_file(K4_TEXT)), "--algos=brute,edge")
    assert code == 2


def test_run_bench_skips_failed_preconditions(k4):
    context = cli.SolveContext(settings=cli.Settings(), deletion_vertices=frozenset())
    table, skipped = cli.run_bench(k4, ["edge", "chordal", "bipartite"], context, 1)
    assert list(table["algorithm"]) == ["edge", "chordal"]
    assert len(skipped) == 1 and skipped[0].startswith("bipartite (")


################################################################################
#
# generate and exit codes
#
################################################################################


def test_generate(run, tmp_path):
    out = tmp_path / "wheel.edges"
    code, output = run("generate", "wheel", "--n=5", "--out", str(out))
    assert code == 0
    assert output == f"{out}\n"
    assert read_edge_list(out).m == 10


@pytest.mark.parametrize(
    "argv",
    [
        ["triangles", "{f}", "--algo=fes", "--kexpr=x.kexpr"],
        ["triangles", "{f}", "--algo=cliquewidth"],
        ["triangles", "{f}", "--algo=bipartite"],
        ["triangles", "{f}", "--algo=fes", "--deletion-set=D.txt"],
        ["triangles", "{f}", "--algo=degeneracy", "--d=2"],
        ["triangles", "{f}", "--algo=fes", "--count-only", "--sorted"],
        ["triangles", "{f}", "--algo=nope"],
        ["triangles", "{f}", "--algo=dtdd", "--d=-1"],
        ["kernelize", "{f}", "--param=fes", "--d=2"],
        ["bench", "{f}", "--algos=edge,nope"],
        ["bench", "{f}", "--reps=0"],
        ["triangles", "missing.edges", "--algo=edge"],
        ["frobnicate"],
    ],
)
def test_usage_errors(run, edge_file, argv):
    path = str(edge_file(K4_TEXT))
    code, output = run(*[arg.replace("{f}", path) for arg in argv])
    assert code == 1
    assert output == ""


@pytest.mark.parametrize("text", ["0 1\n2 2\n", "0 1\n1 ²\n"])
def test_precondition_errors(run, edge_file, text):
    code, output = run("triangles", str(edge_file(text)), "--algo=edge")
    assert code == 2
    assert output == ""


def test_undecodable_edge_file(run, tmp_path):
    path = tmp_path / "latin1.edges"
    path.write_bytes(b"0 1\n\xff 2\n")
    code, _ = run("triangles", str(path), "--algo=edge")
    assert code == 2


def test_unknown_deletion_set_label(run, edge_file, tmp_path):
    deletion_set = tmp_path / "K.txt"
    deletion_set.write_text("0\n42\n", encoding="utf-8")
    code, _ = run("triangles", str(edge_file(K4_TEXT)), "--algo=chordal", f"--deletion-set={deletion_set}")
    assert code == 2


def test_help(run):
    with pytest.raises(SystemExit):
        cli.build_parser().parse_args(["--help"])
    code, _ = run("--help")
    assert code == 0


def test_config_validation_runs_before_reading():
    config = cli.RunConfig(command="triangles", algorithm="chordal")
    with pytest.raises(UsageError):
        config.validate()
