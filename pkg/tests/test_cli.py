import json
import subprocess
import sys

import pytest

from painleve6.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_verify_some(capsys):
    rc, out, _ = run(capsys, "verify", "--id", "I21", "--id", "K", "--jobs", "1")
    assert rc == 0
    assert "2/2 entries have residual 0" in out


def test_implicitize_json(capsys):
    rc, out, _ = run(capsys, "implicitize", "--id", "I21")
    d = json.loads(out)
    assert rc == 0 and (d["b"], d["d_minus_b"], d["terms"]) == (5, 0, 4)


def test_implicitize_csv(capsys):
    rc, out, _ = run(capsys, "implicitize", "--id", "K", "--format", "csv")
    head, row = out.strip().splitlines()
    rec = dict(zip(head.split(","), row.split(",")))
    assert (rec["b"], rec["d_minus_b"], rec["terms"]) == ("7", "1", "12")


def test_implicitize_family_param(capsys):
    rc, out, _ = run(capsys, "implicitize", "--id", "III", "--param", "a=1/3")
    assert rc == 0 and json.loads(out)["b"] == 3


def test_implicitize_modular(capsys):
    rc, out, _ = run(capsys, "implicitize", "--id", "I50", "--modular")
    d = json.loads(out)
    assert (d["b"], d["d_minus_b"]) == (40, 6) and len(d["primes"]) >= 3


def test_transform(capsys):
    rc, out, _ = run(capsys, "transform", "--id", "O13", "--script", "q4,h19")
    d = json.loads(out)
    assert rc == 0 and d["residual_zero"]
    assert d["curve"] == "u^4-2*u^3+2*u*x-x"


def test_transform_bad_script(capsys):
    rc, _, err = run(capsys, "transform", "--id", "I21", "--script", "h99")
    assert rc == 2 and "error" in err


def test_fold_check(capsys):
    rc, out, _ = run(capsys, "fold-check", "--folded", "T06", "--unfolded", "III", "--param", "a=0",
                     "--homography", "8", "--samples", "5", "--precision", "128")
    assert rc == 0 and json.loads(out)["pass"]


def test_fold_check_negative(capsys):
    rc, out, _ = run(capsys, "fold-check", "--folded", "T06", "--unfolded", "u^2-x", "--samples", "5")
    assert rc == 1 and not json.loads(out)["pass"]


def test_certify(capsys):
    rc, out, _ = run(capsys, "certify")
    assert rc == 0
    assert "weierstr I36" in out and "convention=flipped" in out


def test_unknown_id(capsys):
    rc, _, err = run(capsys, "implicitize", "--id", "Z99")
    assert rc == 2 and "Z99" in err


def test_bad_param(capsys):
    rc, _, err = run(capsys, "implicitize", "--id", "III", "--param", "a")
    assert rc == 2


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--version"]) == 0


def test_missing_catalog(capsys, tmp_path):
    rc, _, err = run(capsys, "--catalog", str(tmp_path / "nope.json"), "verify", "--all")
    assert rc == 2 and "cannot load catalog" in err


@pytest.mark.slow
def test_table_compare(capsys, tmp_path):
    out_file = tmp_path / "t.csv"
    rc, _, err = run(capsys, "table", "--compare", "--format", "csv", "--output", str(out_file))
    assert rc == 0
    lines = out_file.read_text().splitlines()
    assert len(lines) == 49
    assert "I34" in err and "O12" in err


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "painleve6.cli", "implicitize", "--id", "II", "--param", "a=1/3",
                        "--param", "b=1/5"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["curve"] == "u^2-x"
