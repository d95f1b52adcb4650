import json
import subprocess
import sys

import pytest

from azbk import cli
from azbk.bar import dual_basis_element
from azbk.coeff import ONE
from azbk.relations import Relation, generic_associator, relations, to_mzv_form
from azbk.serialize import bar_from_json, relation_from_json, relation_to_json
from azbk.words import parse_word


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pentagon_weight_one_text(capsys):
    code, out, _ = run(capsys, "relations", "--family", "pentagon", "--max-weight", "1", "--form", "mzv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5
    assert "X12: zeta(X0) - zeta(X1) = 0" in lines
    assert "X34: 2*zeta(X0) - 2*zeta(X1) = 0" in lines


def test_two_cycle_weight_two_json(capsys):
    code, out, _ = run(capsys, "relations", "--family", "two-cycle", "--max-weight", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    w2 = [r for r in doc["relations"] if r["weight"] == 2]
    assert len(w2) == 4
    x0x1 = next(r for r in w2 if r["key"] == "X0.X1")
    assert {"coeff": "1", "pi_power": 0, "mu_power": 0, "factors": ["X0", "X0"]} in x0x1["terms"]


def test_hexagon_weight_one_trivial(capsys):
    code, out, _ = run(capsys, "relations", "--family", "hexagon", "--max-weight", "1")
    assert code == 0
    assert out.strip().splitlines() == ["X0: 0 = 0  [trivial]", "X1: 0 = 0  [trivial]"]


@pytest.mark.parametrize("family,n", [("two-cycle", 3), ("hexagon", 3), ("pentagon", 2)])
@pytest.mark.parametrize("form", ["symbolic", "mzv"])
def test_json_round_trip(capsys, family, n, form):
    code, out, _ = run(capsys, "relations", "--family", family, "--max-weight", str(n), "--form", form,
                       "--format", "json")
    assert code == 0
    parsed = [relation_from_json(d) for d in json.loads(out)["relations"]]
    expected = relations(family, n)
    if form == "mzv":
        expected = [to_mzv_form(r) for r in expected]
    assert sorted(parsed, key=lambda r: (r.weight, r.key)) == sorted(expected, key=lambda r: (r.weight, r.key))


def test_tables_json_round_trip(capsys):
    code, out, _ = run(capsys, "tables", "--degree", "3", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 10
    for row in rows:
        key = parse_word(row["dual"]["key"])
        assert bar_from_json(row["dual"]) == dual_basis_element(key)
        assert relation_to_json(relation_from_json(row["relation"])) == row["relation"]


def test_tables_text_rows(capsys):
    code, out, _ = run(capsys, "tables", "--degree", "2")
    assert code == 0
    assert "relation: zeta(X0)*zeta(X1) - zeta(X1)^2 = 0" in out
    code, out, _ = run(capsys, "tables", "--degree", "3")
    assert "relation: zeta(X1.X0.X0) + zeta(X1.X0.X1) + zeta(X1.X1.X0) = 0" in out
    assert "+1 [w12|w12|w24] -1 [w12|w24|w45] +1 [w24|w45|w45]" in out


def test_tables_latex(capsys):
    code, out, _ = run(capsys, "tables", "--degree", "1", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\begin{tabular}") and out.count(r"\\") == 6


def test_tables_bad_degree(capsys):
    assert run(capsys, "tables", "--degree", "4")[0] == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "two-cycle", "--max-weight", "4")
    assert code == 0
    assert "30/30 relations within tol 1e-08" in out


def test_verify_detects_corruption(capsys, monkeypatch):
    real = cli.generate

    def corrupted(family, n):
        rels = real(family, n)
        bad = rels[7]
        rels[7] = Relation(bad.family, bad.key, bad.lhs + ONE, bad.form)
        return rels

    monkeypatch.setattr(cli, "generate", corrupted)
    code, out, _ = run(capsys, "verify", "--family", "pentagon", "--max-weight", "2")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize("argv", [
    [],
    ["relations", "--family", "nope", "--max-weight", "2"],
    ["relations", "--family", "pentagon", "--max-weight", "6"],
    ["relations", "--family", "two-cycle", "--max-weight", "0"],
    ["relations", "--family", "two-cycle", "--max-weight", "x"],
    ["verify", "--family", "two-cycle", "--max-weight", "2", "--tol", "-1"],
    ["reduce", "--word", "X12.X99"],
    ["mzv", "--composition", "1,2"],
    ["mzv", "--composition", "2", "--word", "X0.X1"],
    ["mzv"],
    ["dual-basis", "--degree", "0"],
    ["generators", "--degree", "9"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert cli.main(argv) == 2


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "X12.X24")
    assert code == 0
    assert out.strip() == "-1 X24.X34 -1 X24.X45 +1 X24.X12 +1 X34.X24 +1 X45.X24"
    code, out, _ = run(capsys, "reduce", "--word", "X51", "--format", "json")
    assert [t["monomial"] for t in json.loads(out)["terms"]] == ["X24", "X34", "X23"]


def test_mzv(capsys):
    code, out, _ = run(capsys, "mzv", "--composition", "2")
    assert code == 0 and out.strip().startswith("1.6449340668")
    code, out, _ = run(capsys, "mzv", "--word", "X1.X0.X0", "--tol", "1e-20")
    assert out.strip().startswith("1.202056903159594285")


def test_generators_and_dual_basis(capsys):
    code, out, _ = run(capsys, "generators", "--degree", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 10
    code, out, _ = run(capsys, "dual-basis", "--degree", "2")
    assert len(out.strip().splitlines()) == 19


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "azbk.cli", "mzv", "--composition", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("1.2020569031")
    proc = subprocess.run([sys.executable, "-m", "azbk.cli", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_generic_associator_has_unit_constant():
    from azbk.series import linear
    from azbk.words import AX, X0, X1

    phi = generic_associator(linear({X0: ONE}, AX, 2), linear({X1: ONE}, AX, 2), 2)
    assert phi[()] == ONE
