import io
import sys

from bfc.bf import BooleanFunction
from bfc.cli import main


def run_cli(*argv):
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(list(argv))
    finally:
        sys.stdout = old
    return code, out.getvalue()


def test_analyze_family():
    code, out = run_cli("analyze", "--family", "MAJ", "--k", "3")
    assert code == 0
    lines = dict(
        ln.split("\t", 1) for ln in out.splitlines() if ln.count("\t") == 1
    )
    assert lines["deg"] == "3"
    assert lines["DT"] == "3"
    assert lines["I"] == "3/2"
    assert "potential\tdeg" in out
    assert "total\t3/8" in out


def test_analyze_tt_file(tmp_path):
    path = tmp_path / "or2.tt"
    code, _ = run_cli("family", "OR", "--k", "2", "--out", str(path))
    assert code == 0
    f = BooleanFunction.from_tt(path.read_text())
    assert f.n == 2 and f.bits() == (0, 1, 1, 1)
    code, out = run_cli("analyze", str(path))
    assert code == 0
    assert "s\t2" in out


def test_family_stdout():
    code, out = run_cli("family", "PARITY", "--k", "2")
    assert code == 0
    assert out == "n=2\n0110\n"


def test_lp_caps_small():
    code, out = run_cli("lp-caps", "--dmax", "3")
    assert code == 0
    assert out.splitlines() == ["1\t1", "2\t3", "3\t6", "row\t1,3,6"]


def test_table_degree_deterministic():
    code1, out1 = run_cli("table", "degree", "--dmax", "8", "--caps", "square")
    code2, out2 = run_cli("table", "degree", "--dmax", "8", "--caps", "square")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "headline\t" in out1


def test_table_monotone_degree():
    code, out = run_cli("table", "monotone-degree", "--dmax", "10")
    assert code == 0
    assert out.splitlines()[0] == "1\t1/2\t0.500000000"


def test_table_monotone_dt():
    code, out = run_cli("table", "monotone-dt", "--dmax", "5")
    assert code == 0
    assert out.splitlines()[:6] == ["0\t0", "1\t1", "2\t2", "3\t4", "4\t6", "5\t10"]


def test_table_ds_and_cs():
    code, out = run_cli("table", "ds", "--beta", "1/2", "--dmax", "12")
    assert code == 0
    assert "influence_min_k\t" in out
    code, out = run_cli("table", "cs", "--dmax", "4")
    assert code == 0
    assert out.splitlines()[3].startswith("4\t25/24")


def test_verify_exit_codes():
    code, out = run_cli("verify", "--corpus", "all:2")
    assert code == 0
    assert out.rstrip().endswith("failures\t0")
    code, out = run_cli("verify", "--corpus", "named:KUSHILEVITZ")
    assert code == 0


def test_verify_deterministic():
    _, out1 = run_cli("verify", "--corpus", "random:4:25:9")
    _, out2 = run_cli("verify", "--corpus", "random:4:25:9")
    assert out1 == out2
