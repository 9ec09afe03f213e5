"""CLI: parsing, exit codes, determinism, round trips."""

import json

import pytest

from dicolor.cli import main
from dicolor.errors import GraphFormatError
from dicolor.io import (
    build_digraph,
    build_graph,
    format_fraction,
    graph_to_dict,
    parse_fraction,
    parse_graph_text,
)
from dicolor.graphs import complete_graph
from dicolor.sparse import Weighting
from fractions import Fraction


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


K3_JSON = '{"n":3,"edges":[[0,1],[1,2],[0,2]]}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_json_graph():
    data = parse_graph_text(K3_JSON)
    G, w = build_graph(data)
    assert G.n == 3 and len(G.edges) == 3 and w is None


def test_parse_edge_list():
    data = parse_graph_text("3 2\n0 1\n1 2\n")
    G, _ = build_graph(data)
    assert G.edges == ((0, 1), (1, 2))
    with pytest.raises(GraphFormatError):
        parse_graph_text("3 2\n0 1\n")  # header promises two edges


def test_parse_weights():
    data = parse_graph_text('{"n":2,"edges":[[0,1]],"weights":["1/2","3"]}')
    _, w = build_graph(data)
    assert w.values == (Fraction(1, 2), Fraction(3))
    with pytest.raises(GraphFormatError):
        parse_graph_text('{"n":2,"edges":[[0,1]],"weights":["3/0","1"]}')


def test_parse_errors_carry_position():
    with pytest.raises(GraphFormatError) as err:
        parse_graph_text('{"n":2,"edges":[[0,1],]}')
    assert "line" in str(err.value)


def test_duplicate_edge_rejected():
    with pytest.raises(Exception):
        build_graph(parse_graph_text('{"n":3,"edges":[[0,1],[1,0]]}'))


def test_digraph_input_rejects_antiparallel():
    from dicolor.errors import InputError

    with pytest.raises(InputError):
        build_digraph(parse_graph_text('{"n":3,"edges":[[0,1],[1,0],[1,2]]}'))


def test_fraction_round_trip():
    assert format_fraction(Fraction(5, 2)) == "5/2"
    assert format_fraction(Fraction(4)) == "4/1"
    assert parse_fraction("5/2") == Fraction(5, 2)


def test_graph_round_trip(tmp_path):
    G = complete_graph(4)
    text = json.dumps(graph_to_dict(G, Weighting.uniform(4)))
    G2, w2 = build_graph(parse_graph_text(text))
    assert G2.n == G.n and G2.edges == G.edges
    assert w2.values == Weighting.uniform(4).values


def test_compute_chif_exit_zero(tmp_path, capsys):
    path = write(tmp_path, "k3.json", K3_JSON)
    code, out, err = run_cli(capsys, "compute", "chif", path)
    assert code == 0
    report = json.loads(out)
    assert report["results"]["chif"] == "3/1"
    assert report["verdicts"]["strong_duality"] is True


def test_compute_on_petersen_file(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "construct", "kneser", "5", "2",
                           "--out", str(tmp_path / "pet.json"))
    assert code == 0
    code, out, _ = run_cli(capsys, "compute", "chif", str(tmp_path / "pet.json"))
    assert code == 0
    assert json.loads(out)["results"]["chif"] == "5/2"


def test_exit_code_invalid_input(tmp_path, capsys):
    path = write(tmp_path, "bad.json", '{"n":3,"edges":[[0,7]]}')
    code, out, err = run_cli(capsys, "compute", "chi", path)
    assert code == 3
    assert "invalid-input" in err


def test_exit_code_missing_file(capsys):
    code, _, err = run_cli(capsys, "compute", "chi", "/nonexistent/file.json")
    assert code == 3


def test_exit_code_budget(tmp_path, capsys):
    path = write(tmp_path, "k3.json", K3_JSON)
    code, _, err = run_cli(capsys, "compute", "chi", path, "--budget", "2")
    assert code == 2
    assert "budget-exceeded" in err


def test_exit_code_certification_failure(tmp_path, capsys):
    # all four triangles of K_4 can never be simultaneously cyclic
    k4 = json.dumps(graph_to_dict(complete_graph(4)))
    path = write(tmp_path, "k4.json", k4)
    code, _, err = run_cli(capsys, "certify", path, "--t", "4", "--d", "2", "--max-tries", "8")
    assert code == 1
    assert "tries-exhausted" in err


def test_certify_success(tmp_path, capsys):
    path = write(tmp_path, "k3.json", K3_JSON)
    code, out, _ = run_cli(capsys, "certify", path, "--t", "1", "--d", "2",
                           "--seed", "7", "--max-tries", "64")
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"]["certified"] is True


def test_certificate_strict_gates(tmp_path, capsys):
    code, _, err = run_cli(capsys, "construct", "kneser", "5", "2",
                           "--out", str(tmp_path / "pet.json"))
    code, _, err = run_cli(capsys, "certificate", str(tmp_path / "pet.json"), "--strict")
    assert code == 1
    assert "hypotheses-not-met" in err


def test_certificate_relaxed(tmp_path, capsys):
    graph = {
        "n": 6,
        "edges": [[0, 1], [0, 2], [1, 2], [2, 3], [3, 4], [4, 5]],
        "weights": ["1/1", "1/1", "1/1", "1/2", "1/2", "1/2"],
    }
    path = write(tmp_path, "g.json", json.dumps(graph))
    code, out, _ = run_cli(capsys, "certificate", path, "--t", "9/2", "--d", "2", "--seed", "11")
    assert code == 0
    report = json.loads(out)
    assert report["results"]["ratio"] == "9/16"
    assert report["results"]["max_acyclic_weight"] == "7/2"


def test_bounds_subcommands(capsys):
    code, out, _ = run_cli(capsys, "bounds", "kneser-z", "200", "2")
    assert code == 0 and json.loads(out)["results"]["bound"] == 3
    code, out, _ = run_cli(capsys, "bounds", "complete", "1024")
    assert code == 0 and abs(json.loads(out)["results"]["bound"] - 51.2) < 1e-12
    code, out, _ = run_cli(capsys, "bounds", "union-bound", "60")
    rep = json.loads(out)
    assert code == 0 and rep["verdicts"]["bounded_below_one"] is True
    code, out, _ = run_cli(capsys, "bounds", "biclique-cond", "16", "1")
    assert code == 0 and json.loads(out)["results"]["holds"] is True
    code, out, _ = run_cli(capsys, "bounds", "binom", "2", "3")
    assert code == 0 and json.loads(out)["results"]["holds"] is True


def test_bounds_domain_error(capsys):
    code, _, err = run_cli(capsys, "bounds", "kneser-z", "3", "2")
    assert code == 3


def test_construct_embed(capsys):
    code, out, _ = run_cli(capsys, "construct", "embed", "5", "2", "2", "1")
    assert code == 0
    rep = json.loads(out)
    assert rep["results"]["power"] == 4 and rep["results"]["verified"] is True


def test_determinism_same_seed(tmp_path, capsys):
    k4 = json.dumps(graph_to_dict(complete_graph(4)))
    path = write(tmp_path, "k4.json", k4)
    argv = ["compute", "dichi", path, "--mode", "mc", "--trials", "40", "--seed", "9"]
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["results"] == r2["results"]
    assert r1["verdicts"] == r2["verdicts"]


def test_compute_digraph_invariants(tmp_path, capsys):
    tri = '{"n":3,"edges":[[0,1],[1,2],[2,0]]}'
    path = write(tmp_path, "tri.json", tri)
    code, out, _ = run_cli(capsys, "compute", "digraph-chi", path)
    assert code == 0 and json.loads(out)["results"]["digraph_chi"] == 2
    code, out, _ = run_cli(capsys, "compute", "digraph-chif", path)
    assert code == 0 and json.loads(out)["results"]["digraph_chif"] == "3/2"


def test_compute_alphaf(tmp_path, capsys):
    path = write(tmp_path, "k3.json", K3_JSON)
    code, out, _ = run_cli(capsys, "compute", "alphaf", path)
    assert code == 0 and json.loads(out)["results"]["alphaf"] == "1/1"


def test_verify_subcommand_table_and_csv(tmp_path, capsys):
    out_csv = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, "verify", "--suite", "kneser", "--out", str(out_csv))
    assert code == 0
    assert "PASS" in out and "checks passed" in out
    text = out_csv.read_text()
    assert text.startswith("number,name,passed")
    assert text.count("true") >= 3
