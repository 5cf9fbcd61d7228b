import json
from pathlib import Path

from qmn.cli import EXIT_FAIL, EXIT_GUARD, EXIT_INPUT, EXIT_OK, main

DATA = Path(__file__).resolve().parent.parent / "data"
STRIP = str(DATA / "weighted_strip.json")
CANCEL = str(DATA / "cancellation.json")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_expand_text_output(capsys):
    code, out = run(capsys, "expand", "--poset", STRIP)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 40
    table = dict(line.split("\t") for line in lines)
    assert table["8"] == "1/1"
    assert table["1,5,2"] == "-3/1"
    assert table["1,2,1,2,2"] == "8/1"


def test_expand_json_output(capsys):
    code, out = run(capsys, "expand", "--poset", CANCEL, "--basis", "M", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["basis"] == "M"
    assert all(set(t) == {"alpha", "coeff"} for t in payload["terms"])


def test_expand_psi_basis(capsys):
    code, out = run(capsys, "expand", "--poset", CANCEL, "--basis", "Psi")
    assert code == EXIT_OK
    assert out.strip()


def test_oracle_matches_expand_in_m_basis(capsys):
    _, via_rule = run(capsys, "expand", "--poset", CANCEL, "--basis", "M", "--json")
    _, via_oracle = run(capsys, "oracle", "--poset", CANCEL, "--json")
    assert json.loads(via_rule) == json.loads(via_oracle)


def test_verify_pass_and_fail(capsys):
    code, out = run(capsys, "verify", "--poset", STRIP)
    assert code == EXIT_OK and out.strip() == "PASS"
    code, out = run(capsys, "verify", "--poset", STRIP, "--selftest-corrupt")
    assert code == EXIT_FAIL and out.startswith("FAIL")


def test_chi(capsys):
    code, out = run(capsys, "chi", "--lam", "2,1", "--mu", "3")
    assert code == EXIT_OK and out.strip() == "-1"


def test_schur_table(capsys):
    code, out = run(capsys, "schur", "--n", "3", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["n"] == 3
    assert len(payload["table"]) == 9


def test_identities_report(capsys):
    code, out = run(
        capsys, "identities", "--d", "1,2,2", "--json", "--samples", "500", "--seed", "1"
    )
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["sum"] == "1/1"
    assert report["q_identity"] is True
    assert report["linext_lhs"] == report["linext_rhs"]
    assert sum(int(v.split("/")[0]) for v in report["monte_carlo"].values()) > 0


def test_random_check(capsys):
    code, out = run(capsys, "random-check", "--count", "12", "--n-max", "5", "--seed", "3")
    assert code == EXIT_OK
    assert out.strip().startswith("12/12 main")


def test_input_error_exit_code(capsys, tmp_path):
    code, _ = run(capsys, "expand", "--poset", str(tmp_path / "missing.json"))
    assert code == EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "covers": [[0, 1], [1, 0]], "labels": [1, 2], "weights": [1, 1]}))
    code, _ = run(capsys, "expand", "--poset", str(bad))
    assert code == EXIT_INPUT


def test_guard_exit_code(capsys, tmp_path, monkeypatch):
    big = tmp_path / "big.json"
    n = 11
    big.write_text(
        json.dumps(
            {
                "n": n,
                "covers": [[i, i + 1] for i in range(n - 1)],
                "labels": list(range(1, n + 1)),
                "weights": [1] * n,
            }
        )
    )
    code, _ = run(capsys, "expand", "--poset", str(big))
    assert code == EXIT_GUARD
    code, _ = run(capsys, "--max-n", "11", "expand", "--poset", str(big))
    assert code == EXIT_OK
    monkeypatch.setenv("QMN_MAX_N", "11")
    code, _ = run(capsys, "expand", "--poset", str(big))
    assert code == EXIT_OK
