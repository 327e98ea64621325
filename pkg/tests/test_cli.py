import json

import pytest

from powerdom.cli import main
from powerdom.generators import named
from powerdom.triangulation import parse, serialize


@pytest.fixture
def graph_file(tmp_path):
    def write(tag):
        p = tmp_path / f"{tag}.rot"
        p.write_text(serialize(named(tag)))
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_octahedron(capsys, graph_file):
    code, out, _ = run(capsys, "solve", graph_file("octahedron"))
    d = json.loads(out)
    assert code == 0 and d["S"] == [0] and d["n"] == 6


def test_solve_explain_and_exact(capsys, graph_file):
    path = graph_file("triakis")
    code, out, _ = run(capsys, "solve", "--explain", path)
    d = json.loads(out)
    assert code == 0 and len(d["S"]) == 2 and d["trace"]
    code, out, _ = run(capsys, "solve", "--exact", "--prune-dominated", path)
    assert code == 0 and json.loads(out)["gamma_p"] == 2


def test_exact_budget_exceeded(capsys, graph_file):
    code, _, err = run(capsys, "solve", "--exact", "--k-max", "1", graph_file("triakis"))
    assert code == 1 and "error" in err


def test_solve_is_byte_deterministic(capsys, graph_file):
    path = graph_file("triakis")
    first = run(capsys, "solve", "--explain", path)[1]
    assert run(capsys, "solve", "--explain", path)[1] == first


def test_bad_input_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.rot"
    p.write_text("not a graph\n")
    assert run(capsys, "solve", str(p))[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing.rot"))[0] == 2


def test_analyze(capsys, graph_file):
    code, out, _ = run(capsys, "analyze", graph_file("octahedron"))
    d = json.loads(out)
    assert code == 0 and d["small_class"] == "octahedron"
    assert [c["type"] for c in d["configurations"]] == [8]


def test_analyze_triakis_reports_error(capsys, graph_file):
    code, out, _ = run(capsys, "analyze", graph_file("triakis"))
    assert code == 3 and "error" in json.loads(out)


def test_generate_round_trip(capsys, tmp_path):
    out_path = tmp_path / "g.rot"
    code, _, _ = run(capsys, "generate", "--family", "random_mixed", "--n", "30", "--seed", "2",
                     "--flips", "40", "-o", str(out_path))
    assert code == 0
    g = parse(out_path.read_text())
    assert g.n == 30 and serialize(g) == out_path.read_text()
    code, out, _ = run(capsys, "generate", "--family", "lower_bound", "--k", "2")
    assert code == 0 and parse(out).n == 12


def test_generate_unknown_tag(capsys):
    assert run(capsys, "generate", "--family", "named", "--name", "dodecahedron")[0] == 2


def test_trace(capsys, graph_file):
    path = graph_file("octahedron")
    code, out, _ = run(capsys, "trace", path, "0")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("DOM") and lines[1].startswith("PROP")
    assert run(capsys, "trace", path, "99")[0] == 2


def test_cross_validate(capsys):
    code, out, _ = run(capsys, "cross-validate", "--max-n", "9", "--count", "5")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) >= 5
    assert all(r["ok"] and r["size"] >= r["gamma_p"] for r in rows)


def test_property_suite(capsys):
    code, out, _ = run(capsys, "property-suite", "--count", "4", "--n-max", "14", "--lower-bound", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and rows[-1]["summary"]["passed"]


def test_property_suite_empty_corpus(capsys):
    code, out, _ = run(capsys, "property-suite", "--no-named", "--count", "0", "--lower-bound")
    summary = json.loads(out.splitlines()[-1])["summary"]
    assert code == 0 and summary["instances"] == 0 and summary["warning"] == "empty corpus"
