import json
import pathlib
import re

import pytest

from primeatlas.cli import main, parse_complex
from primeatlas.fixtures import LAMBDA_TABLES, OMEGA_TABLES

GOLDEN = pathlib.Path(__file__).parent / "golden" / "domains"
GOLDEN_OMEGA = pathlib.Path(__file__).parent / "golden" / "omega"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_complex():
    assert parse_complex("1,2") == 1 + 2j
    assert parse_complex("inf").real == float("inf")
    assert parse_complex("-1.5") == -1.5 + 0j


def all_golden_cases():
    for p, columns in sorted(LAMBDA_TABLES.items()):
        for column in columns:
            yield p, column.i, column.j


@pytest.mark.parametrize("p,i,j", list(all_golden_cases()))
def test_domains_matches_golden_bytes(p, i, j, capsys):
    code, out, err = run(capsys, "domains", "-p", str(p), "-i", str(i), "-j", str(j))
    assert code == 0 and err == ""
    golden = (GOLDEN / f"p{p}_i{i}_j{j}.txt").read_text()
    assert out == golden


@pytest.mark.parametrize("p,i,j", list(all_golden_cases()))
def test_golden_files_carry_the_transcribed_cells(p, i, j):
    # the goldens must stay anchored to the hand-transcribed tables
    column = next(
        c for c in LAMBDA_TABLES[p] if (c.i, c.j) == (i, j)
    )
    lines = (GOLDEN / f"p{p}_i{i}_j{j}.txt").read_text().splitlines()
    assert lines[0].endswith(f"kappa={column.kappa}")
    cells = [line.split()[-1] for line in lines[1:]]
    assert cells == [f"{a}.{b}" for a, b in column.cells]


@pytest.mark.parametrize("p", sorted(OMEGA_TABLES))
def test_lefschetz_matches_golden_bytes(p, capsys):
    code, out, err = run(capsys, "lefschetz", "-p", str(p))
    assert code == 0 and err == ""
    assert out == (GOLDEN_OMEGA / f"p{p}.txt").read_text()


@pytest.mark.parametrize("p", sorted(OMEGA_TABLES))
def test_omega_golden_files_carry_the_transcribed_sets(p):
    text = (GOLDEN_OMEGA / f"p{p}.txt").read_text()
    sets = {}
    for line in text.splitlines():
        match = re.match(r"Omega_(\d+)\^\d+ = \{([\d,]+)\}", line)
        assert match, line
        sets[int(match.group(1))] = frozenset(int(x) for x in match.group(2).split(","))
    assert sets == OMEGA_TABLES[p]


def test_domains_json_roundtrip(capsys):
    code, out, _ = run(capsys, "domains", "-p", "11", "-i", "2", "-j", "3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["kappa"] == "k6"
    assert payload["slots"][0] == {"slot": "AD", "angle": 1, "pair": [2, 3]}
    assert json.loads(json.dumps(payload)) == payload


def test_domains_rejects_bad_pair(capsys):
    code, out, err = run(capsys, "domains", "-p", "13", "-i", "2", "-j", "10")
    assert code == 1
    assert out == "" and "error" in err


def test_lefschetz_text(capsys):
    code, out, _ = run(capsys, "lefschetz", "-p", "17")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("Omega_1^17 = {1,8,15}")
    code, out, _ = run(capsys, "lefschetz", "-p", "5")
    assert out.strip().splitlines()[0].startswith("Omega_1^5 = {1,2,3}")


def test_lefschetz_invalid_prime(capsys):
    code, out, err = run(capsys, "lefschetz", "-p", "4")
    assert code == 1 and "error" in err


def test_lefschetz_json_and_csv(capsys):
    code, out, _ = run(capsys, "lefschetz", "-p", "13", "--format", "json")
    payload = json.loads(out)
    assert [c["k"] for c in payload["classes"]] == [1, 2, 3]
    assert payload["classes"][2]["aut"]["order"] == 39
    code, out, _ = run(capsys, "lefschetz", "-p", "13", "--format", "csv")
    rows = out.strip().splitlines()
    assert rows[0] == "k,members,cardinality,aut_structure,aut_order,equation"
    assert len(rows) == 4


def test_gimel_text(capsys):
    code, out, _ = run(capsys, "gimel", "-p", "5", "--tiling", "equilateral")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.startswith("class")]
    assert len(lines) == 3
    kappas = [l.split("kappa=")[1].split()[0] for l in lines]
    assert kappas == ["k1", "k3", "k5"]


def test_gimel_exceptional_note_p3(capsys):
    code, out, _ = run(capsys, "gimel", "-p", "3", "--tiling", "square")
    assert code == 0
    assert "48" in out  # metadata note about the genus-2 curve


def test_components_formats(capsys):
    code, out, _ = run(capsys, "components", "-p", "7")
    assert code == 0
    assert out.splitlines()[0] == "p=7: 4 components (type1=1, type2=2, type3=1)"
    code, out, _ = run(capsys, "components", "-p", "7", "--format", "json")
    payload = json.loads(out)
    assert len(payload["components"]) == 4
    code, out, _ = run(capsys, "components", "-p", "7", "--format", "dot")
    assert out.startswith("graph components_p7 {")


def test_moduli_text(capsys):
    code, out, _ = run(capsys, "moduli", "-g", "6")
    assert code == 0
    assert "isolated singular points: 1" in out
    assert "dimension-one components: 2" in out


def test_equation_command(capsys):
    code, out, _ = run(capsys, "equation", "lefschetz", "-p", "7", "-k", "2")
    assert code == 0
    assert out.splitlines()[0] == "y^7 = x(x-1)^2"
    code, out, _ = run(
        capsys, "equation", "hyperelliptic", "-p", "5", "-a", "1,0"
    )
    assert out.splitlines()[0] == "y^2 = x^10 - 1"
    code, out, _ = run(capsys, "equation", "square", "-p", "5", "-a", "2", "-b", "4")
    assert out.splitlines()[0] == "y^5 = (x-1)(x-i)^2(x+1)^3(x+i)^4"
    code, out, _ = run(capsys, "equation", "equilateral", "-p", "7", "-n", "1", "-m", "1")
    assert out.splitlines()[0] == "y^7 = x^3 - 1"


def test_equation_invalid(capsys):
    code, out, err = run(capsys, "equation", "equilateral", "-p", "7", "-n", "3", "-m", "3")
    assert code == 1 and "error" in err


def test_tiling_command(capsys):
    code, out, _ = run(capsys, "tiling", "--", "1,0", "0,1", "-1,0", "0,-1")
    assert code == 0
    assert out.strip() == "j = 1728 (square)"
    code, out, _ = run(capsys, "tiling", "0,0", "1,0", "3,0", "inf")
    assert "(generic)" in out


def test_crosscheck_command(capsys):
    code, out, _ = run(capsys, "crosscheck", "-p", "11")
    assert code == 0
    assert "ok   isolated_singularities" in out
    assert "ok   dim_one_components" in out


def test_atlas_write_and_regression(tmp_path, capsys):
    code, out, _ = run(capsys, "atlas", "-p", "5", "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "atlas_p5.json"
    assert path.exists()
    payload = json.loads(path.read_text())
    assert payload["p"] == 5 and payload["schema_version"] == 1
    assert len(payload["gimel"]["equilateral"]) == 3
    # the verify suite accepts the fresh atlas
    code, out, _ = run(capsys, "verify", "--max-p", "7", "--atlas-dir", str(tmp_path))
    assert code == 0
    assert "ok   atlas-regression" in out
    # and flags a stale one
    payload["gimel"]["equilateral"][0]["kappa"] = "k6"
    path.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "verify", "--max-p", "7", "--atlas-dir", str(tmp_path))
    assert code == 2
    assert "FAIL atlas-regression" in out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-p", "13")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "8/8 checks passed"
    for name in (
        "omega-fixtures",
        "lambda-fixtures",
        "count-identities",
        "oracle-censuses",
        "moduli-cross-check",
        "structural-censuses",
        "equation-suite",
        "four-point-parameter",
    ):
        assert any(line.startswith(f"ok   {name}") for line in lines), name


def test_deterministic_output(capsys):
    first = run(capsys, "gimel", "-p", "13", "--tiling", "square", "--format", "json")
    second = run(capsys, "gimel", "-p", "13", "--tiling", "square", "--format", "json")
    assert first == second
