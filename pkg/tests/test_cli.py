import json
import subprocess
import sys

import pytest

from brieskorn.classify import REFERENCE_WITNESSES
from brieskorn.cli import main
from brieskorn.correction import leg_order_permutation
from brieskorn.plumbing import standard_graph
from brieskorn.seifert import BrieskornIndex, from_brieskorn


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_json(capsys):
    code, out, _ = run(capsys, "info", "2", "3", "5", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["d"] == "2" and obj["fillable_count"] == 1
    assert obj["seifert"] == "M(-2; 1/2, 2/3, 4/5)" and obj["euler"] == "-1/30"
    for key in ("manifold", "h1", "negative_definite", "d3", "d_certification", "notes"):
        assert key in obj


def test_info_plain_and_reverse(capsys):
    code, out, _ = run(capsys, "info", "11", "3", "2", "--reverse")
    assert code == 0
    assert "manifold: -Sigma(2,3,11)" in out and "d: -2" in out


def test_info_cache(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "cache.jsonl"
    code, first, _ = run(capsys, "info", "3", "5", "7", "--json", "--cache", str(cache))
    assert code == 0 and len(cache.read_text().splitlines()) == 1
    cli = sys.modules["brieskorn.cli"]
    monkeypatch.setattr(cli, "classify", lambda *a, **k: pytest.fail("cache not used"))
    code, second, _ = run(capsys, "info", "7", "5", "3", "--json", "--cache", str(cache))
    assert code == 0 and second == first


def test_info_domain_error(capsys):
    code, _, err = run(capsys, "info", "2", "4", "5")
    assert code == 1 and "not coprime" in err


def test_d3_and_count(capsys):
    assert run(capsys, "d3", "2", "3", "7", "41")[:2] == (0, "-418\n")
    assert run(capsys, "count", "2", "7", "11")[:2] == (0, "2\n")
    code, _, err = run(capsys, "count", "2", "3", "7")
    assert code == 1 and "blow-down" in err


def test_dinv(capsys):
    assert run(capsys, "dinv", "2", "3", "7")[:2] == (0, "0\n")
    assert run(capsys, "dinv", "3", "5", "14")[:2] == (0, "4\n")
    code, out, _ = run(capsys, "dinv", "2", "3", "11", "13", "--budget", "10")
    assert code == 1 and out.startswith("budget exceeded: 100663296 initial vectors")


def _listed_vector(exps):
    leg_exps, values = REFERENCE_WITNESSES[exps]
    g = standard_graph(from_brieskorn(BrieskornIndex(exps)))
    perm = leg_order_permutation(g, [exps.index(a) for a in leg_exps])
    listed = [0] * g.size
    for pos, val in values.items():
        listed[pos - 1] = val
    return listed, perm


def test_dinv_verify(tmp_path, capsys):
    listed, perm = _listed_vector((3, 5, 14))
    vec = tmp_path / "v.txt"
    order = tmp_path / "o.txt"
    order.write_text(" ".join(map(str, perm)) + "\n")
    vec.write_text("# vector then expected grading\n" + " ".join(map(str, listed + [4])) + "\n")
    code, out, _ = run(capsys, "dinv", "3", "5", "14", "--verify", str(vec), "--ordering", str(order))
    assert code == 0 and "EndsCorrectly" in out and "grading=4" in out
    vec.write_text(" ".join(map(str, listed + [6])) + "\n")
    code, out, _ = run(capsys, "dinv", "3", "5", "14", "--verify", str(vec), "--ordering", str(order))
    assert code == 2 and "MISMATCH" in out


def test_dinv_verify_bad_vector(tmp_path, capsys):
    vec = tmp_path / "v.txt"
    vec.write_text("1 0 0\n")
    code, _, err = run(capsys, "dinv", "2", "3", "5", "--verify", str(vec))
    assert code == 1 and "entries" in err


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--max-product", "1000")
    assert code == 0
    rows = [line.split("\t")[0] for line in out.splitlines() if not line.startswith("#")]
    assert "Sigma(2,3,11,13)" in rows and "Sigma(2,7,11)" in rows and "Sigma(2,3,5)" not in rows


def test_table1(capsys):
    code, out, _ = run(capsys, "table1", "--kmax", "2")
    assert code == 0
    assert out.splitlines()[-1] == "16/16 rows PASS"


def test_dioph(capsys):
    code, out, _ = run(capsys, "dioph", "quadruples", "--oracle", "--bound", "45")
    assert code == 0
    assert out.splitlines()[1:3] == ["2\t3\t7\t41", "2\t3\t11\t13"]
    assert "agrees" in out
    code, out, _ = run(capsys, "dioph", "triples", "--oracle", "--bound", "6")
    assert code == 0 and "FAMILY\t(2,3,6v-1), v >= 2" in out and "agrees" in out
    code, out, _ = run(capsys, "dioph", "prop-new", "--bound", "25")
    assert code == 0 and out.splitlines()[-1] == "# 0 solutions with a, b, c <= 25"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "brieskorn", "info", "2", "3", "5", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["d"] == "2"
