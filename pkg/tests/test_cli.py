import json
import subprocess
import sys

from qonsager.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_normalize(capsys):
    assert run(capsys, "normalize", "B*A")[:2] == (0, "q^2*A*B + (q^3 - q^-1)*C - (q^2 - 1)*gamma")
    assert run(capsys, "normalize", "A", "--basis", "pre")[:2] == (0, "A")
    code, out, _ = run(capsys, "normalize", "A*B*C")
    assert code == 0 and "q^-1*Omega" in out and out.count(" + ") + out.count(" - ") == 6


def test_normalize_json_file(capsys, tmp_path):
    code, out, _ = run(capsys, "normalize", "C*A", "--format", "json")
    assert code == 0
    path = tmp_path / "e.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "normalize", f"@{path}")
    assert code == 0 and out2.startswith("q^-2*A*C")


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "normalize", "A^-1")
    assert code == 2 and "bad-exponent" in err


def test_pbw(capsys):
    assert run(capsys, "pbw", "alpha1", "0", "--method", "closed")[:2] == (0, "B")
    code, out, _ = run(capsys, "pbw", "delta", "1", "--method", "all")
    assert code == 0 and out.endswith("methods agree: yes")
    code, _, err = run(capsys, "pbw", "delta", "0")
    assert code == 2 and "index-out-of-range" in err
    code, _, err = run(capsys, "pbw", "alpha0", "2", "--method", "recursive-a1")
    assert code == 2


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "relations", "--max-n", "1")
    assert code == 0 and out.splitlines()[-1].startswith("suite relations: pass")
    target = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "closed-forms", "--max-n", "3", "--format", "json", "--output", str(target))
    report = json.loads(target.read_text())
    assert code == 0 and report["overall"] == "pass"


def test_series_and_eval(capsys):
    code, out, _ = run(capsys, "series", "--order", "12")
    assert code == 0 and out.count("PASS") == 8
    code, out, _ = run(capsys, "eval-q", "[3]_q", "--q0", "2")
    assert code == 0 and out == "1\t21/4"
    code, _, err = run(capsys, "eval-q", "A", "--q0", "1")
    assert code == 2 and "forbidden-q0" in err


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "qonsager.cli", "pbw"], capture_output=True)
    assert proc.returncode == 2
