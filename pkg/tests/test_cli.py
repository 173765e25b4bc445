import io
import json
import subprocess
import sys

import pytest

from recquint.cli import EXIT_BUDGET, EXIT_ERROR, EXIT_OK, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_classify_phi5():
    code, text = run("classify", "2", "1", "1")
    assert code == EXIT_OK
    assert "seed=0" in text and "budget=" in text
    assert "disc = 125" in text and "verdict: Monogenic" in text and "galois: C4" in text


def test_classify_family_member():
    code, text = run("classify", "3", "1", "5")
    assert code == EXIT_OK
    assert "reducible (FamilyCase2)" in text
    assert "x^4 + x^3 + x^2 - x + 1" in text and "x^4 - x^3 + x^2 + x + 1" in text


def test_classify_wreath_octic():
    code, text = run("classify", "3", "9", "9", "--json")
    doc = json.loads(text)
    rec = doc["record"]
    assert doc["irreducible"] and doc["header"]["seed"] == 0
    assert rec["verdict"]["status"] == "NotMonogenic" and rec["verdict"]["obstruction_primes"] == [2]
    assert rec["galois"]["label"] == "WreathC2sqC2"
    assert doc["disc_formula"] == doc["disc_subresultant"]


def test_exit_codes():
    assert run("classify", "2", "0", "1")[0] == EXIT_ERROR
    assert run("classify", "1", "1", "1")[0] == EXIT_ERROR
    assert run("bogus")[0] == EXIT_ERROR
    assert run("search", "--A-range", "5:1")[0] == EXIT_ERROR
    p, q = 4_294_967_311, 4_294_967_357
    assert run("classify", "2", "3", str(p * q + 4), "--budget", "1")[0] == EXIT_BUDGET


def test_pell_table():
    code, text = run("pell", "--max-n", "6")
    assert code == EXIT_OK
    assert "(29,61)" in text and "R=121=11^2" in text
    code, text = run("pell", "--max-n", "6", "--json")
    rows = json.loads(text)["rows"]
    assert rows[3]["AB"] == [29, 61] and rows[3]["square"]["value"] == 121


def test_density_command():
    code, text = run("density", "--factors=-1,4|5,12|5,-8,16", "--X", "10000", "--json")
    assert code == EXIT_OK
    rep = json.loads(text)["report"]
    assert rep["obstruction_primes"] == [] and rep["certified"]
    assert float(rep["cg_decimal"]) > 0 and rep["ng_count"][1] >= 10
    assert run("density", "--factors=1,1,1,1,1")[0] == EXIT_ERROR


def test_search_and_family(tmp_path):
    out = tmp_path / "grid.jsonl"
    csv = tmp_path / "grid.csv"
    code, text = run("search", "--n", "2", "--json", "--out", str(out), "--csv", str(csv))
    assert code == EXIT_OK
    lines = text.splitlines()
    assert json.loads(lines[0])["header"]["command"] == "search"
    assert len(lines) - 1 == len(out.read_text().splitlines()) == len(csv.read_text().splitlines()) - 1
    code, text = run("family", "--k", "1", "--count", "4")
    assert code == EXIT_OK and "4 records with G(t) squarefree, 4 distinct" in text


def test_json_is_deterministic():
    for argv in (("search", "--n", "3", "--json"), ("family", "--json"), ("classify", "2", "5", "5", "--json")):
        assert run(*argv)[1] == run(*argv)[1]
    assert run("search", "--n", "3", "--json")[1] == run("search", "--n", "3", "--json", "--jobs", "2")[1]


def test_verify_subset():
    code, text = run("verify", "--only", "2,10")
    assert code == EXIT_OK
    assert "[PASS]  2" in text and "[PASS] 10" in text and "2/2 criteria passed" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "recquint", "classify", "2", "1", "1", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["record"]["field_disc"] == 125
