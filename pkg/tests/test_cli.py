import json

import pytest

from sheafforge.cli import main


@pytest.fixture
def ideal_file(tmp_path):
    p = tmp_path / "ideal.txt"
    p.write_text("ring x, y\nideal: x^3, y^3\n")
    return str(p)


@pytest.fixture
def max_ideal_file(tmp_path):
    p = tmp_path / "mm.txt"
    p.write_text("ring x, y\nideal: x, y\n")
    return str(p)


def test_gb(ideal_file, capsys):
    assert main(["gb", ideal_file]) == 0
    out = capsys.readouterr().out
    assert "x^3" in out and "y^3" in out


def test_gb_with_order(ideal_file):
    assert main(["gb", ideal_file, "--order", "lex"]) == 0


def test_member_exit_codes(ideal_file, capsys):
    assert main(["member", ideal_file, "x^4"]) == 0
    assert main(["member", ideal_file, "x^2*y^2"]) == 1
    assert main(["member", ideal_file, "x^^2"]) == 2


def test_sat(ideal_file, capsys):
    assert main(["sat", ideal_file, "x"]) == 0
    out = capsys.readouterr().out
    assert "exponent: 3" in out


def test_classify_json(max_ideal_file, tmp_path, capsys):
    report = tmp_path / "out.json"
    assert main(["classify", max_ideal_file, "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["generic_rank"] == 1
    assert payload["corank"] == 1
    assert payload["torsion_free"] is True


def test_classify_at_point(max_ideal_file, capsys):
    assert main(["classify", max_ideal_file, "--at", "1,0"]) == 0
    out = capsys.readouterr().out
    assert "min_generators: 1" in out


def test_torsion(max_ideal_file, capsys):
    assert main(["torsion", max_ideal_file]) == 0
    assert "torsion-free" in capsys.readouterr().out


def test_linspace(max_ideal_file, capsys):
    assert main(["linspace", max_ideal_file]) == 0
    out = capsys.readouterr().out
    assert "primary component linear: True" in out


def test_blowup_chain(ideal_file, tmp_path, capsys):
    report = tmp_path / "chain.json"
    code = main([
        "blowup", "--n", "2", "--sheaf", ideal_file,
        "--op", "chain", "--degree-bound", "6", "--json", str(report),
    ])
    assert code == 0
    payload = json.loads(report.read_text())
    assert payload["chain_holds"] is True
    assert payload["stable"] is True
    assert sorted(payload["middle"]) == sorted(["x^3", "y^3", "x^2*y^2"])


def test_blowup_pushforward(ideal_file, capsys):
    assert main([
        "blowup", "--n", "2", "--sheaf", ideal_file, "--op", "pushforward",
    ]) == 0
    out = capsys.readouterr().out
    assert "x^2*y" in out and "x*y^2" in out


def test_canonical(capsys):
    assert main(["canonical", "--n", "2"]) == 0
    assert "[1, 1]" in capsys.readouterr().out


def test_missing_file_is_usage_error(capsys):
    assert main(["gb", "/nonexistent/path.txt"]) == 2


def test_verify_paper_subset(tmp_path, capsys):
    report = tmp_path / "verify.json"
    assert main(["verify-paper", "--only", "quotient", "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert payload["version"] == 1
    assert len(payload["checks"]) == 1
    assert payload["checks"][0]["status"] == "PASS"


def test_verify_paper_full(tmp_path):
    report = tmp_path / "verify.json"
    assert main(["verify-paper", "--json", str(report)]) == 0
    payload = json.loads(report.read_text())
    assert len(payload["checks"]) == 9
    assert all(c["status"] == "PASS" for c in payload["checks"])
