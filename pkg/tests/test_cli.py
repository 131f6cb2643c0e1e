import json

import pytest
from helpers import write_config

from freeshift.main import main

FAIR = {"group": {"rank": 1, "mode": "group"}, "alphabet": 2, "measure": {"type": "bernoulli", "p": ["1/2", "1/2"]}, "n": 1}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def cells(line):
    return [c.strip() for c in line.split("\t")]


@pytest.fixture
def fair(tmp_path):
    return write_config(tmp_path / "fair.json", FAIR)


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample", "--n-max", 3)
    assert code == 0
    lines = out.splitlines()
    assert cells(lines[0]) == ["n", "H_Pn", "H_join", "H_cond", "F_Pn"]
    assert [cells(line) for line in lines[1:4]] == [
        ["1", "2", "4", "2", "2"],
        ["2", "4", "6", "2", "2"],
        ["3", "6", "8", "2", "2"],
    ]
    assert lines[4] == "liminf F(P_n) = 2 ≠ 1 = f(alpha) [bits]"


def test_output_is_deterministic(capsys):
    first = run(capsys, "counterexample", "--n-max", 2)[1]
    second = run(capsys, "counterexample", "--n-max", 2)[1]
    assert first == second


def test_counterexample_json(capsys):
    code, out, _ = run(capsys, "counterexample", "--n-max", 2, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["rows"][1] == {"n": "2", "H_Pn": "4", "H_join": "6", "H_cond": "2", "F_Pn": "2"}
    assert data["f_sequence"] == ["1", "1", "1"]
    assert data["stabilized"] is True


def test_ball(capsys):
    code, out, _ = run(capsys, "ball", "--rank", 2, "--mode", "group", "--n", 2)
    lines = out.splitlines()
    assert code == 0
    assert cells(lines[0]) == ["size", "17"]
    assert cells(lines[1]) == ["index", "element", "length"]
    assert cells(lines[2]) == ["0", "e", "0"]
    assert len(lines) == 2 + 17

    code, out, _ = run(capsys, "ball", "--rank", 2, "--mode", "semigroup", "--n", 2, "--json")
    assert json.loads(out) == {"size": 7, "elements": ["e", "a", "b", "aa", "ab", "ba", "bb"]}


def test_verify_lemma(capsys, fair):
    code, out, _ = run(capsys, "verify-lemma", "--config", fair)
    assert code == 0
    assert out.strip() == "32 patterns checked, 0 violations"


def test_verify_lemma_json(capsys, fair):
    code, out, _ = run(capsys, "verify-lemma", "-C", fair, "--strategy", "geodesic", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["strategy"] == "geodesic"
    assert data["checked_by_radius"] == [8, 40]
    assert data["violations"] == 0


def test_oracle_compare(capsys, fair):
    code, out, _ = run(capsys, "oracle-compare", "--config", fair, "--m", 1)
    rows = dict(cells(line) for line in out.splitlines()[1:])
    assert code == 0
    assert rows == {"m": "1", "admissible": "32", "image": "32", "equal": "true"}


def test_markovize(capsys, fair):
    code, out, _ = run(capsys, "markovize", "--config", fair, "--n", 0)
    pi_table, transitions = out.split("\n\n")
    assert code == 0
    assert [cells(line) for line in pi_table.splitlines()] == [
        ["state", "pattern", "pi"],
        ["0", "0", "1/2"],
        ["1", "1", "1/2"],
    ]
    rows = [cells(line) for line in transitions.splitlines()]
    assert rows[0] == ["generator", "i", "j", "P"]
    assert len(rows) == 1 + 8
    assert rows[1] == ["a", "0", "0", "1/2"]
    assert {r[3] for r in rows[1:]} == {"1/2"}


def test_admissible(capsys, fair):
    code, out, _ = run(capsys, "admissible", "--config", fair)
    lines = out.splitlines()
    assert code == 0
    assert cells(lines[0]) == ["count", "32"]
    assert cells(lines[1]) == ["#", "e", "a", "A"]
    assert len(lines) == 2 + 32
    assert cells(lines[2]) == ["0", "000", "000", "000"]


def test_validate_ts(capsys, tmp_path, fair):
    code, out, _ = run(capsys, "validate-ts", "--config", fair)
    assert code == 0
    assert ["passed", "true"] in [cells(line) for line in out.splitlines()]

    cycle = [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]]
    config = {
        "alphabet": 3,
        "measure": {"type": "tree_markov", "pi": ["1/3", "1/3", "1/3"], "matrices": {"a": cycle, "A": cycle}},
    }
    code, out, _ = run(capsys, "validate-ts", "--config", write_config(tmp_path / "cycle.json", config))
    rows = [cells(line) for line in out.splitlines()]
    assert code == 1
    assert ["reversible", "false"] in rows
    assert ["passed", "false"] in rows


def test_support_gap(capsys, tmp_path, fair):
    and_code = {"window": ["e", "a"], "target_size": 2, "map": [["00", 0], ["01", 0], ["10", 0], ["11", 1]]}
    code, out, _ = run(capsys, "support-gap", "-C", fair, "--code", write_config(tmp_path / "and.json", and_code))
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == "gap at m=1"
    assert [cells(line) for line in lines[1:5]] == [["site", "symbol"], ["e", "0"], ["a", "1"], ["A", "1"]]
    # the same witness read along the axis
    assert cells(lines[5]) == ["along_axis", "A e a", "101"]
    assert len(lines) == 6

    code, out, _ = run(capsys, "support-gap", "-C", fair, "--code", tmp_path / "and.json", "--json")
    assert json.loads(out)["along_axis"] == {"sites": ["A", "e", "a"], "witness": [1, 0, 1]}

    xor = {"window": ["e", "a"], "target_size": 2, "map": [["00", 0], ["01", 1], ["10", 1], ["11", 0]]}
    code, out, _ = run(capsys, "support-gap", "-C", fair, "--code", write_config(tmp_path / "xor.json", xor))
    assert code == 0
    assert out.strip() == "no gap up to m_max=4"


def test_entropy(capsys, tmp_path, fair):
    pn = write_config(tmp_path / "pn.json", {"kind": "pn", "n": 2})
    shifted = write_config(tmp_path / "shifted.json", {"kind": "pn", "n": 2, "shift": "A"})
    code, out, _ = run(capsys, "entropy", "-C", fair, "--partition", pn, "--conditional", shifted)
    rows = {r[0]: r[1:] for r in (cells(line) for line in out.splitlines()[1:])}
    assert code == 0
    assert rows["H(P)"][0] == "4"
    assert rows["H(Q)"][0] == "4"
    assert rows["H(P|Q)"] == ["2", "2.000000000000", "bits"]


def test_f_seq(capsys, fair):
    code, out, _ = run(capsys, "f-seq", "-C", fair, "--n-max", 3)
    lines = out.splitlines()
    assert code == 0
    assert [cells(line)[:2] for line in lines[1:5]] == [["0", "1"], ["1", "1"], ["2", "1"], ["3", "1"]]
    assert cells(lines[5]) == ["stabilized", "true"]


def test_invalid_inputs_exit_2(capsys, tmp_path):
    bad = dict(FAIR, measure={"type": "bernoulli", "p": ["1/0", "1"]})
    assert run(capsys, "verify-lemma", "-C", write_config(tmp_path / "bad.json", bad))[0] == 2

    floats = dict(FAIR, measure={"type": "bernoulli", "p": [0.5, 0.5]})
    assert run(capsys, "verify-lemma", "-C", write_config(tmp_path / "floats.json", floats))[0] == 2

    semigroup = dict(
        FAIR,
        group={"rank": 1, "mode": "semigroup"},
        measure={"type": "tree_markov", "pi": ["1/2", "1/2"], "matrices": {"A": [["1", "0"], ["0", "1"]]}},
    )
    assert run(capsys, "markovize", "-C", write_config(tmp_path / "semi.json", semigroup))[0] == 2

    assert run(capsys, "verify-lemma")[0] == 2
    assert run(capsys, "verify-lemma", "-C", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "ball", "--rank", 0)[0] == 2
    code, _, err = run(capsys, "ball", "--n", "two")
    assert code == 2
    assert "usage" in err


def test_entropy_refuses_non_invariant_measure(capsys, tmp_path):
    flat = [["1/2", "1/2"], ["1/2", "1/2"]]
    config = dict(FAIR, measure={"type": "tree_markov", "pi": ["1/3", "2/3"], "matrices": {"a": flat, "A": flat}})
    path = write_config(tmp_path / "stationary.json", config)
    alpha = write_config(tmp_path / "alpha.json", {"kind": "product", "window": ["e"]})

    code, out, err = run(capsys, "entropy", "-C", path, "--partition", alpha)
    assert code == 2
    assert out == ""
    assert "not invariant" in err
    assert run(capsys, "f-seq", "-C", path)[0] == 2

    # validate-ts still reports which check fails
    code, out, _ = run(capsys, "validate-ts", "-C", path)
    assert code == 1
    assert ["stationary", "false"] in [cells(line) for line in out.splitlines()]


def test_missing_generator_matrix_exits_2(capsys, tmp_path):
    config = dict(
        FAIR,
        group={"rank": 2, "mode": "group"},
        measure={"type": "tree_markov", "pi": ["1/2", "1/2"], "matrices": {"a": [["1/2", "1/2"], ["1/2", "1/2"]]}},
    )
    path = write_config(tmp_path / "rank2.json", config)
    window = write_config(tmp_path / "eb.json", {"kind": "product", "window": ["e", "b"]})
    code, _, err = run(capsys, "entropy", "-C", path, "--partition", window)
    assert code == 2
    assert "no matrix for b, B" in err
    assert run(capsys, "validate-ts", "-C", path)[0] == 2


def test_semigroup_F_is_unsupported(capsys, tmp_path):
    semigroup = dict(FAIR, group={"rank": 2, "mode": "semigroup"})
    assert run(capsys, "f-seq", "-C", write_config(tmp_path / "semi.json", semigroup))[0] == 2


def test_budget_exit_3(capsys, fair):
    assert run(capsys, "oracle-compare", "-C", fair, "--budget", 10)[0] == 3
    code, _, err = run(capsys, "verify-lemma", "-C", fair, "--n", 2, "--strategy", "exhaustive", "--budget", 100)
    assert code == 3
    assert "Largest completed sub-radius: 0" in err


def test_auto_strategy_fits_small_budget(capsys, fair):
    # the exhaustive walk would visit 56 nodes, the geodesic one at most 24 per path
    code, out, _ = run(capsys, "verify-lemma", "-C", fair, "--budget", 40)
    assert code == 0
    assert out.strip() == "40 patterns checked, 0 violations"


def test_log_file(capsys, monkeypatch, tmp_path, fair):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, "verify-lemma", "-C", fair, "--log-file", "verify.log", "--verbose")
    assert code == 0
    text = (tmp_path / "verify.log").read_text()
    assert "Strategy: exhaustive" in text
    assert "Sub-radius 1: 32 patterns checked" in text
    assert "DEBUG" in err


def test_malformed_files_exit_2(capsys, tmp_path, fair):
    bad_code = {"window": ["e"], "target_size": 2, "map": [["0", None], ["1", 0]]}
    code, _, err = run(capsys, "support-gap", "-C", fair, "--code", write_config(tmp_path / "code.json", bad_code))
    assert code == 2
    assert "Traceback" not in err

    bad_matrix = dict(FAIR, measure={"type": "tree_markov", "pi": ["1/2", "1/2"], "matrices": {"a": 1}})
    assert run(capsys, "validate-ts", "-C", write_config(tmp_path / "matrix.json", bad_matrix))[0] == 2
