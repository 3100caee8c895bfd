import json

import pytest

from krlie.cli import main
from krlie.expr import parse_element
from krlie.rootdata import parse_group


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_present_g2(capsys):
    code, out, _ = run(capsys, "present", "G2")
    assert code == 0
    assert "dR(1)  degree -1" in out and "dR(2)  degree -1" in out
    assert "dR(1)^2 = eta*([w1] + 1)*dR(1) + eta*dR(2)" in out


def test_present_json_schema(capsys):
    code, out, _ = run(capsys, "present", "U4", "--involution", "symp", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"group", "involution", "generators", "relations", "coefficient_ring"}
    assert data["involution"] == "symp"
    kinds = {g["name"]: g["degree"] for g in data["generators"]}
    assert kinds == {"dH(1)": -5, "dR(2)": -1, "dH(3)": -5, "dR(4)": -1}
    assert all(isinstance(r, str) for r in data["relations"])


@pytest.mark.parametrize("argv,code", [
    (["present", "U3", "--involution", "symp"], 3),
    (["present", "T2", "--involution", "conj"], 3),
    (["present", "U3"], 3),
    (["present", "X9"], 2),
    (["mul", "SU3", "beta", "eta"], 2),
    (["mul", "G2", "dR(1", "eta"], 2),
    (["finite", "no-such-table"], 2),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err.startswith("error:")


def test_parse_error_has_caret(capsys):
    _, _, err = run(capsys, "mul", "SU3", "eta", "eta + beta")
    assert "position 6" in err and err.rstrip().endswith("^")


def test_mul_g2_square(capsys):
    code, out, _ = run(capsys, "mul", "G2", "dR(1)", "dR(1)")
    assert code == 0
    g2 = parse_group("G2")
    rendered = out.splitlines()[0]
    # eta is 2-torsion, so [w1]-1 and [w1]+1 give the same class
    assert parse_element(g2, rendered) == parse_element(g2, "eta*([w1]-1)*dR(1) + eta*dR(2)")
    assert out.splitlines()[1] == "degree: -2"


@pytest.mark.parametrize("argv", [["mul", "U2", "eta", "mu"], ["mul", "SU3", "lam1", "lam1"]])
def test_mul_zero(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_mul_json_round_trip(capsys):
    code, out, _ = run(capsys, "mul", "SU3", "r([w1]*beta*dG(1))", "r(dG(2))", "--format", "json")
    data = json.loads(out)
    spec = parse_group("SU3")
    assert parse_element(spec, data["product"]) == (
        parse_element(spec, "r([w1]*beta*dG(1))") * parse_element(spec, "r(dG(2))"))


@pytest.mark.parametrize("group,inv", [("U2", "conj"), ("G2", "trivial"), ("C2", "trivial")])
def test_verify_passes(capsys, group, inv):
    code, out, _ = run(capsys, "verify", group, "--involution", inv, "--samples", "5")
    assert code == 0
    assert "FAIL" not in out


def test_verify_c2_includes_rank_one_consistency(capsys):
    _, out, _ = run(capsys, "verify", "C2", "--samples", "0")
    assert any("SU(2)" in line or "Sp(2)" in line for line in out.splitlines())


def test_finite_tables(capsys):
    code, out, _ = run(capsys, "finite", "Q8xC3")
    assert code == 0
    lines = out.splitlines()
    assert lines[2].split() == ["R", "4", "10", "1"]
    assert lines[3].split() == ["RR", "4", "5", "1"]
    assert lines[4].split() == ["RH", "1", "5", "4"]
    _, out, _ = run(capsys, "finite", "trivial", "--format", "json")
    data = json.loads(out)
    assert data["ranks"]["R"] == {"R": 1, "C": 0, "H": 0}


def test_finite_table_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("order 2\n1:0 1:0\n1;1\n1;2\n")
    code, _, err = run(capsys, "finite", str(path))
    assert code == 2 and err.startswith("error:")


def test_table_and_reptypes(capsys):
    code, out, _ = run(capsys, "table", "SU3", "--level", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["types"] == {"R": 1, "C": 2, "H": 0}
    code, out, _ = run(capsys, "reptypes", "C2")
    assert code == 0
    assert "type H" in out and "type R" in out


@pytest.mark.parametrize("argv", [
    ["present", "SU4", "--format", "json"],
    ["table", "G2", "--level", "2"],
    ["verify", "SU3", "--seed", "4", "--samples", "5"],
])
def test_output_deterministic(capsys, argv):
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first
