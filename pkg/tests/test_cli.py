import csv
import io
import json
import subprocess
import sys

import pytest

from oracles import primes_td
from primereg.cli import COLUMNS, GridSpec, certified_digits, main, truncate_digits
from primereg.errors import ConfigError

HEADER = ("x,pi,li,ri,legendre,x_over_logx,pi_osc,theta,theta_reg,theta_osc,"
          "psi,psi_osc,R,R_reg,R_osc,vonkoch_ratio")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_header_is_frozen():
    assert ",".join(COLUMNS) == HEADER


def test_tabulate_csv(capsys):
    code, out, _ = run(capsys, "tabulate", "--xmin", "10", "--xmax", "100", "--points", "5",
                       "--spacing", "log")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == HEADER and lines[-1] == ""
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 5
    last = rows[-1]
    assert float(last["x"]) == 100.0
    assert int(last["pi"]) == len(primes_td(100)) == 25
    for row in rows:
        assert float(row["psi_osc"]) == float(row["psi"]) - float(row["x"])
        assert len(row["theta"].split("e")[0].replace("-", "").replace(".", "")) == 17


def test_tabulate_json_and_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, _, _ = run(capsys, "tabulate", "--xmin", "2", "--xmax", "50", "--points", "4",
                     "--spacing", "lin", "--format", "json", "--out", str(path))
    assert code == 0
    rows = json.loads(path.read_text(encoding="utf-8"))
    assert list(rows[0]) == list(COLUMNS)
    assert rows[0]["x"] == 2.0 and rows[0]["pi"] == 1
    assert rows[0]["vonkoch_ratio"] is None  # x < 3
    assert rows[0]["legendre"] is None       # log x <= A


def test_tabulate_function_subset(capsys):
    code, out, _ = run(capsys, "tabulate", "--xmin", "10", "--xmax", "20", "--points", "2",
                       "--functions", "psi,pi")
    assert code == 0
    assert out.splitlines()[0] == "x,pi,psi"


def test_tabulate_is_deterministic(capsys):
    argv = ["tabulate", "--xmin", "3", "--xmax", "5000", "--points", "7"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize("argv", [
    ["tabulate", "--xmin", "1", "--xmax", "10"],
    ["tabulate", "--xmin", "10", "--xmax", "5"],
    ["tabulate", "--points", "1"],
    ["tabulate", "--functions", "zeta"],
    ["tabulate", "--functions", ""],
    ["tabulate", "--xmax", "1000", "--sieve-limit", "10"],
    ["tabulate", "--spacing", "cubic"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        sys.exit(main(argv))
    assert info.value.code == 2


def test_resource_exhaustion_exit_3(capsys):
    code, _, err = run(capsys, "tabulate", "--xmin", "10", "--xmax", "1e14", "--points", "2")
    assert code == 3 and "resource" in err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "eq28", "1e4", "--tol", "1e-9")
    assert code == 0
    assert out.startswith("eq28 x=1.0000000000000000e+04") and out.rstrip().endswith("PASS")


def test_check_multiple_x(capsys):
    code, out, _ = run(capsys, "check", "eq21", "100", "2.5", "1e4")
    assert code == 0 and len(out.splitlines()) == 3


def test_check_unattainable_tolerance(capsys):
    code, out, _ = run(capsys, "check", "eq12", "1e4", "--tol", "1e-20")
    assert code == 1 and "FAIL" in out


def test_check_unknown_identity(capsys):
    code, _, err = run(capsys, "check", "eq99", "1e4")
    assert code == 2 and "eq99" in err


def test_constants_paper_prefixes(capsys):
    code, out, _ = run(capsys, "constants", "--digits", "6")
    assert code == 0
    r_line = next(l for l in out.splitlines() if l.startswith("r_limit"))
    assert r_line.split("=")[1].split()[0].startswith("-1.33258")
    code, out, _ = run(capsys, "constants", "--digits", "3")
    off_line = next(l for l in out.splitlines() if l.startswith("li_offset"))
    assert off_line.split("=")[1].split()[0] == "1.04"


def test_constants_precision_contract(capsys):
    code, out, err = run(capsys, "constants", "--digits", "15", "--prime-sum-cutoff", "1000")
    assert code == 1 and "certified to" in err


def test_constants_accelerated(capsys):
    code, out, _ = run(capsys, "constants", "--digits", "15", "--accelerated")
    assert code == 0 and "-1.33258227573322" in out


def test_constants_bad_digits(capsys):
    assert run(capsys, "constants", "--digits", "16")[0] == 2
    assert run(capsys, "constants", "--digits", "0")[0] == 2


def test_digit_helpers():
    assert truncate_digits(1.0451637801, 3) == "1.04"
    assert truncate_digits(-1.332582275, 6) == "-1.33258"
    assert certified_digits(-1.3325830316, 8.6e-7) == 6
    assert certified_digits(1.0, 0.0) == 17


def test_gridspec():
    g = GridSpec(10, 100, 5, "log")
    assert g.values()[0] == 10 and g.values()[-1] == 100
    with pytest.raises(ConfigError):
        GridSpec(2, 2, 5)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "primereg", "check", "eq28", "100"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
