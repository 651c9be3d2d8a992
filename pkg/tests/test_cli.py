import json
import subprocess
import sys

import pytest

from rmghw.cli import main, parse_factors
from rmghw.evalcode import build_code
from rmghw.gf import field_of_order
from rmghw.oracle import ghw_subset_rank
from rmghw.tables import FIXTURES, CodeParams, build_table, check_fixture, fixture_table
from rmghw.varieties import projective_torus


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_check(capsys, name):
    code, out, err = run(capsys, "table", name, "--check")
    assert code == 0, err
    assert "all cells match" in err


def test_f5_table_csv(capsys):
    code, out, _ = run(capsys, "table", "f5-torus", "--check", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "d,1,2,3,4,5,6"
    assert lines[2] == "H,3,6,10,13,15,16"
    assert lines[3] == "delta_1,12,8,4,3,2,1"
    assert lines[4] == "delta_2,15,11,7,4,3,2"
    assert lines[5] == "delta_3,16,12,8,6,4,3"


def test_f8_table_uses_formula(capsys):
    code, out, _ = run(capsys, "table", "f8-p2", "--check", "--format", "json")
    rows = json.loads(out)["rows"]
    assert len(rows) == 15
    assert {m for row in rows for _, m in row["method"]} == {"ClosedForm"}


def test_check_is_byte_identical(capsys):
    first = run(capsys, "table", "f5-veronese-torus", "--check", "--format", "json")
    second = run(capsys, "table", "f5-veronese-torus", "--check", "--format", "json")
    assert first == second


def test_json_roundtrip(capsys):
    for argv in (
        ["table", "f5-torus", "--format", "json"],
        ["ghw", "--q", "5", "--s", "3", "--kind", "torus", "--d", "2", "--r", "3", "--method", "oracle"],
        ["verify-veronese", "--q", "5", "--s", "3", "--kind", "torus", "--k", "2", "--d", "1"],
    ):
        _, out, _ = run(capsys, *argv)
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


def test_explicit_torus_table_matches_oracle(capsys):
    code, out, _ = run(capsys, "table", "--q", "3", "--s", "3", "--kind", "torus", "--dmax", "2", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["d"] for r in rows] == [1, 2]
    T = projective_torus(field_of_order(3), 3)
    for row in rows:
        assert row["delta"][0][1] == ghw_subset_rank(build_code(T, row["d"]), 1)[0]


def test_oracle_only_table(capsys):
    code, out, _ = run(capsys, "table", "f5-torus", "--check", "--method", "oracle", "--format", "json")
    assert code == 0
    methods = {m for row in json.loads(out)["rows"] for _, m in row["method"]}
    assert methods <= {"SubsetRank", "CodewordEnum"}


def test_table_mismatch_exit_code(capsys, monkeypatch):
    from rmghw import tables

    f = FIXTURES["f5-veronese-torus"]
    broken = tables.Fixture(f.name, f.params, f.dmax, f.regularity, f.m, (6, 13, 15), f.delta)
    monkeypatch.setitem(tables.FIXTURES, f.name, broken)
    code, _, err = run(capsys, "table", f.name, "--check")
    assert code == 2 and "H=16, expected 15" in err


def test_unavailable_cells():
    rows = build_table(CodeParams(8, 3, "projective"), [2], rmax=2)
    assert rows[0].delta[1].method == "ClosedForm"
    assert rows[0].delta[2].method == "Unavailable"
    assert rows[0].delta[2].value is None


def test_ghw_auto_agreement(capsys):
    code, out, _ = run(capsys, "ghw", "--q", "5", "--s", "3", "--kind", "torus", "--d", "2", "--r", "3", "--method", "auto")
    rep = json.loads(out)
    assert code == 0 and rep["agree"]
    assert rep["weights"] == [[3, 12]]
    assert set(rep["method"]) == {"Footprint", "SubsetRank"}


def test_ghw_formula_out_of_range(capsys):
    code, _, err = run(capsys, "ghw", "--q", "5", "--s", "3", "--kind", "torus", "--d", "4", "--r", "3", "--method", "formula")
    assert code == 4 and "RankOutOfTheoremRange" in err


def test_ghw_small_projective(capsys):
    code, out, _ = run(capsys, "ghw", "--q", "2", "--s", "2", "--kind", "projective", "--d", "1", "--r", "1")
    assert code == 0 and json.loads(out)["weights"] == [[1, 2]]


def test_ghw_guard_exit_code(capsys):
    code, _, err = run(capsys, "ghw", "--q", "8", "--s", "3", "--kind", "projective", "--d", "9", "--r", "3", "--method", "oracle")
    assert code == 3


@pytest.mark.parametrize(
    "argv, kappa",
    [
        (["--q", "8", "--s", "3", "--kind", "projective", "--k", "2", "--d", "2"], 15),
        (["--q", "5", "--s", "3", "--kind", "torus", "--k", "2", "--d", "3"], 16),
        (["--q", "5", "--s", "3", "--kind", "torus", "--k", "1", "--d", "1"], 3),
    ],
)
def test_verify_veronese(capsys, argv, kappa):
    code, out, _ = run(capsys, "verify-veronese", *argv)
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    assert rep["kappa_base"] == rep["kappa_veronese"] == kappa


def test_build_outputs(capsys):
    code, out, _ = run(capsys, "build", "--q", "2", "--s", "2", "--kind", "projective", "--d", "1")
    assert out.splitlines() == ["2 2 1 3 2", "1 0 1", "0 1 1"]
    code, out, _ = run(capsys, "build", "--q", "3", "--s", "3", "--kind", "cartesian", "--factors", "0,1;0,1,2", "--emit", "points")
    assert out.splitlines()[0] == "3 3 6 cartesian[2,3]"


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--bogus"])
    assert exc.value.code == 4
    assert run(capsys, "table", "nonexistent")[0] == 4
    assert run(capsys, "ghw", "--q", "6", "--s", "2", "--kind", "projective", "--d", "1", "--r", "1")[0] == 4
    assert run(capsys, "ghw", "--q", "5", "--s", "3", "--kind", "cartesian", "--factors", "0,1", "--d", "1", "--r", "1")[0] == 4
    assert parse_factors("0,1;2,3,4") == ((0, 1), (2, 3, 4))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "rmghw", "table", "f5-veronese-torus", "--check"], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert "delta_3" in proc.stdout


def test_fixture_helpers():
    rows = fixture_table("f5-veronese-torus")
    assert check_fixture("f5-veronese-torus", rows) == []
    assert check_fixture("f5-veronese-torus", rows[:2])
