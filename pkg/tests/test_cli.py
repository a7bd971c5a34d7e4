import json

import pytest

from ginshift.cli import (EXIT_CERTIFICATION, EXIT_CHECK_FAILED,
                          EXIT_INVALID_INPUT, EXIT_PASS, EXIT_SIZE_LIMIT, main)


@pytest.fixture
def rei_file(tmp_path):
    path = tmp_path / "rei.ideal"
    path.write_text("ring=ext n=4\ne{1,2}\ne{1,3}\ne{3,4}\n")
    return str(path)


@pytest.fixture
def edges_file(tmp_path):
    path = tmp_path / "edges.ideal"
    path.write_text("ring=poly n=4\nx1*x2\nx3*x4\n")
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.graph"
    path.write_text("n 4\n1 2\n1 3\n3 4\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_gin_exterior(rei_file, capsys):
    code, out = run(capsys, ["gin", rei_file, "--order", "revlex"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["generators"] == ["e{1,2}", "e{1,3}", "e{2,3}"]
    assert doc["certificate"]["accepted"] is True


def test_gin_polynomial_adaptive(edges_file, capsys):
    code, out = run(capsys, ["gin", edges_file, "--order", "lex"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["generators"] == ["x1^2", "x1*x2", "x1*x3^2", "x2^4"]


def test_gin_deterministic_output(rei_file, capsys):
    _, out1 = run(capsys, ["gin", rei_file, "--seed", "7"])
    _, out2 = run(capsys, ["gin", rei_file, "--seed", "7"])
    assert out1 == out2


def test_shift(rei_file, capsys):
    code, out = run(capsys, ["shift", rei_file, "--pairs", "1,3"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["generators"] == ["e{1,2}", "e{1,3}", "e{1,4}", "e{2,3,4}"]


def test_witnesses(rei_file, capsys):
    code, out = run(capsys, ["witnesses", rei_file, "--budget", "50"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    gens = {tuple(w["generators"]) for w in doc["witnesses"]}
    assert ("e{1,2}", "e{1,3}", "e{2,3}") in gens
    assert ("e{1,2}", "e{1,3}", "e{1,4}", "e{2,3,4}") in gens


def test_classify(graph_file, capsys):
    code, out = run(capsys, ["classify", graph_file])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["condition_v"] is False
    assert doc["condition_vi"] is False
    assert doc["condition_v_witness"]["graph"] == "a"
    assert doc["chordal"] is True


def test_profile_closed_form(capsys):
    code, out = run(capsys, ["profile", "--closed-form", "2,3"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["bipartite_profile"] == [4, 6, 6, 6, 6]
    assert doc["two_cliques_profile"] == doc["two_cliques_profile_h_sum"]


def test_profile_requires_input(capsys):
    code, _ = run(capsys, ["profile"])
    assert code == EXIT_INVALID_INPUT


def test_betti_with_oracle(tmp_path, capsys):
    path = tmp_path / "stable.ideal"
    path.write_text("ring=poly n=2\nx1^2\nx1*x2\nx2^3\n")
    code, out = run(capsys, ["betti", str(path), "--oracle"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["oracle_matches"] is True
    assert doc["betti"]["entries"] == [[0, 2, 2], [0, 3, 1], [1, 2, 1], [1, 3, 1]]


def test_shifted_complex(tmp_path, capsys):
    path = tmp_path / "c4.complex"
    path.write_text(json.dumps(
        {"n": 4, "facets": [[1, 3], [1, 4], [2, 3], [2, 4]]}))
    code, out = run(capsys, ["shifted-complex", str(path)])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert sorted(map(tuple, doc["shifted"]["facets"])) == \
        [(1, 4), (2, 3), (2, 4), (3, 4)]
    assert doc["f_vector"] == [1, 4, 4]


def test_sweep_thm1(capsys):
    code, out = run(capsys, ["sweep", "thm1", "--n", "3"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["summary"]["passed"] is True
    assert doc["summary"]["classes"] == 7


def test_sweep_thm2(capsys):
    code, out = run(capsys, ["sweep", "thm2", "--n", "3"])
    assert code == EXIT_PASS
    assert json.loads(out)["summary"]["passed"] is True


def test_properties_subcommand(capsys):
    code, out = run(capsys, ["properties", "--samples", "8"])
    assert code == EXIT_PASS
    doc = json.loads(out)
    assert doc["passed"] is True


def test_invalid_input_exit_codes(tmp_path, capsys):
    code, _ = run(capsys, ["gin", str(tmp_path / "missing.ideal")])
    assert code == EXIT_INVALID_INPUT
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring=ext n=4\ne{1;2}\n")
    code, _ = run(capsys, ["gin", str(bad)])
    assert code == EXIT_INVALID_INPUT


def test_prime2_field_is_restricted(rei_file, capsys):
    code, _ = run(capsys, ["gin", rei_file, "--field", "prime:2"])
    assert code == EXIT_INVALID_INPUT


def test_size_limit_exit_code(tmp_path, capsys):
    n = 13
    path = tmp_path / "big.ideal"
    path.write_text(f"ring=ext n={n}\ne{{1,2}}\n")
    code, _ = run(capsys, ["gin", str(path), "--degree-cap", "2"])
    assert code == EXIT_SIZE_LIMIT


def test_table_format(rei_file, capsys):
    code, out = run(capsys, ["gin", rei_file, "--format", "table"])
    assert code == EXIT_PASS
    assert "generators:" in out
