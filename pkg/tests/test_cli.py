import json
import subprocess
import sys

import pytest

from nonsolvable.cli import EXIT_CAP, EXIT_INPUT, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lambda_command(capsys):
    code, out, _ = run(capsys, "lambda", "W:2")
    assert code == 0
    assert json.loads(out)["lambda"] == 2


def test_class_l(capsys):
    code, out, _ = run(capsys, "class-l", "29120")
    doc = json.loads(out)
    assert code == 0 and doc["family"] == "Sz" and doc["q"] == 8 and doc["in_L"]


def test_group_file_input(tmp_path, capsys):
    f = tmp_path / "s3.json"
    f.write_text(json.dumps({"degree": 3, "generators": [[[1, 2, 3]], [[1, 2]]]}))
    code, out, _ = run(capsys, "radical", str(f))
    assert code == 0 and json.loads(out)["order"] == 6


@pytest.mark.parametrize("argv,code", [
    (["frobnicate"], EXIT_USAGE),
    ([], EXIT_USAGE),
    (["lambda"], EXIT_USAGE),
    (["lambda", "bogus:1"], EXIT_INPUT),
    (["lambda", "missing.json"], EXIT_INPUT),
    (["lambda", "alt:20000"], EXIT_CAP),
    (["class-l", "0"], EXIT_INPUT),
    (["rarefied-find", "alt:7", "--mode", "nope"], EXIT_USAGE),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_malformed_group_file(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    assert run(capsys, "lambda", str(f))[0] == EXIT_INPUT
    f.write_text(json.dumps({"degree": 3, "generators": [[[1, 7]]]}))
    assert run(capsys, "lambda", str(f))[0] == EXIT_INPUT


def test_output_is_deterministic(capsys):
    first = run(capsys, "rs-series", "SL:q=5,d=2", "--seed", "5")[1]
    second = run(capsys, "rs-series", "SL:q=5,d=2", "--seed", "5")[1]
    assert first == second
    assert "elapsed" not in first


def test_verify_suite_exit_zero(capsys):
    code, out, err = run(capsys, "verify", "exponent", "--n", "2")
    assert code == 0
    assert json.loads(out)[0]["verdict"] == "pass"
    assert "pass" in err


def test_build_writes_group_and_certificate(tmp_path, capsys):
    out = tmp_path / "w2.json"
    assert run(capsys, "build", "W:2", "--out", str(out))[0] == 0
    assert json.loads(out.read_text())["degree"] == 25
    cert = json.loads((tmp_path / "w2.cert.json").read_text())
    assert cert["lambda"] == 2
    # round trip: the written group is accepted as input
    code, text, _ = run(capsys, "lambda", str(out))
    assert code == 0 and json.loads(text)["lambda"] == 2


def test_rarefied_find(capsys):
    code, out, _ = run(capsys, "rarefied-find", "alt:7")
    assert code == 0 and json.loads(out)["order"] == 360


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nonsolvable", "class-l", "60"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["in_L"] is True
