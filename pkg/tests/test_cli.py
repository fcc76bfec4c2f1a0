import csv
import io
import json
import subprocess
import sys

import pytest

from gwcp3 import cli
from gwcp3.errors import SolverError
from gwcp3.table import GWTable


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--max-degree", "1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["degree", "a", "b", "N0", "N1", "count", "status"]
    assert rows[1:] == [["1", "0", "2", "1", "-1/12", "0", "OK"],
                        ["1", "2", "1", "1", "-1/12", "0", "OK"],
                        ["1", "4", "0", "2", "-1/6", "0", "OK"]]


def test_compute_json_and_md(capsys):
    code, out, _ = run(capsys, "compute", "--max-degree", "2", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 8
    code, out, _ = run(capsys, "compute", "--max-degree", "2", "--format", "md")
    assert code == 0 and "-4 1/2" in out


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.strip() == "verified 35 cells through degree 5: 0 differences"


def test_verify_mismatch(capsys, monkeypatch):
    rows = list(cli.golden_rows())
    n, a, b, g0, g1, count = rows[4]
    rows[4] = (n, a, b, g0, g1 + 1, count)
    monkeypatch.setattr(cli, "golden_rows", lambda: iter(rows))
    code, out, _ = run(capsys, "verify", "--max-degree", "2")
    assert code == 3
    assert "verified 8 cells through degree 2: 1 differences" in out
    assert "N1" in out


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--max-degree", "3")
    assert code == 0
    assert out.splitlines() == ["degree 1: no overlap cells",
                                "degree 2: 2 cells, 0 differences",
                                "degree 3: 4 cells, 0 differences"]


@pytest.mark.parametrize("argv", [
    ["compute", "--max-degree", "0"],
    ["compute", "--max-degree", "x"],
    ["compute", "--format", "xml"],
    ["frobnicate"],
    [],
    ["export"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_malformed_cache(capsys, tmp_path):
    bad = tmp_path / "bad.gwt"
    bad.write_text("# gwcp3-table v1\n0 1 0 2 oops SEED\n")
    code, _, err = run(capsys, "compute", "--max-degree", "1", "--cache", str(bad))
    assert code == 1 and "bad.gwt:2:" in err


def test_solver_error_exit(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise SolverError(1, "inconsistent system")
    monkeypatch.setattr(cli, "compute_table", boom)
    code, _, err = run(capsys, "compute", "--max-degree", "1")
    assert code == 2 and "inconsistent" in err


def test_cache_roundtrip(capsys, tmp_path):
    cache = tmp_path / "c.gwt"
    code, first, _ = run(capsys, "compute", "--max-degree", "3", "--cache", str(cache))
    assert code == 0 and cache.exists()
    assert len(GWTable.load(cache)) == 2 * (3 + 5 + 7)
    code, second, _ = run(capsys, "compute", "--max-degree", "4", "--cache", str(cache))
    assert code == 0 and second.startswith(first)
    assert len(GWTable.load(cache)) == 2 * (3 + 5 + 7 + 9)


def test_export(capsys, tmp_path):
    out = tmp_path / "exp"
    code, _, _ = run(capsys, "export", "--max-degree", "2", "--out", str(out))
    assert code == 0
    assert sorted(p.name for p in out.iterdir()) == ["counts.csv", "table.csv", "table.gwt", "table.json"]
    table = GWTable.load(out / "table.gwt")
    assert GWTable.from_json((out / "table.json").read_text()) == table
    assert (out / "table.csv").read_text() == table.to_csv()
    counts = list(csv.DictReader(io.StringIO((out / "counts.csv").read_text())))
    assert len(counts) == 8 and all(r["count"] == "0" for r in counts)


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.csv"
    code, out, _ = run(capsys, "compute", "--max-degree", "1", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("degree,a,b")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gwcp3", "compute", "--max-degree", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("\n") == 4
