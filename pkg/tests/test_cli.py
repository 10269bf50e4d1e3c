import json
import subprocess
import sys

import pytest

from diagcubic.cli import run


def run_json(capsys, *argv):
    code = run([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_classify_theorem_case(capsys):
    assert run(["classify", "--a", "1", "--b", "1", "--c", "2", "--d", "3"]) == 0
    out = capsys.readouterr().out
    assert "structure: Z3" in out
    assert "generator: {3/2, (x+ζy)/(x+y)}_3" in out


def test_classify_json_manin(capsys):
    code, data = run_json(capsys, "classify", "--a", "1", "--b", "1", "--c", "1", "--d", "2")
    assert code == 0
    assert data["structure"] == "Z3Squared"
    assert data["generator"] == "see Manin"
    assert set(data) == {"structure", "tag", "condition", "generator"}


def test_classify_abstract(capsys):
    code, data = run_json(capsys, "classify", "--lambda", "0,1", "--mu", "1,0", "--nu", "1,1")
    assert code == 0 and data["structure"] == "Z3" and data["tag"] == "h1_only"
    code, data = run_json(capsys, "classify", "--lambda", "0,1", "--mu", "1,0", "--nu", "1,1", "--cd-at-most-2")
    assert data["tag"] == "equals_br_quotient"


def test_text_and_json_agree(capsys):
    argv = ["classify", "--a", "1", "--b", "2", "--c", "4", "--d", "3"]
    run(argv)
    text = capsys.readouterr().out
    _, data = run_json(capsys, *argv)
    assert f"structure: {data['structure']}" in text
    assert f"tag: {data['tag']}" in text


@pytest.mark.parametrize("argv", [
    ["classify", "--a", "0", "--b", "1", "--c", "1", "--d", "1"],
    ["classify", "--a", "1", "--b", "1"],
    ["classify", "--lambda", "0,3", "--mu", "0,0", "--nu", "0,0"],
    ["classify", "--a", "x", "--b", "1", "--c", "1", "--d", "1"],
    ["bogus"],
    ["verify", "--check", "nope"],
    ["cohomology", "--a", "1"],
    [],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv) == 2
    assert capsys.readouterr().err


def test_lines_json(capsys):
    code, data = run_json(capsys, "lines")
    assert code == 0
    assert len(data["incidence"]) == 27
    assert all(len(v) == 10 for v in data["incidence"].values())
    assert sum(len(v) for v in data["incidence"].values()) == 270
    assert all(len(v) == 7 for v in data["pic_classes"].values())
    # basis [L(0)], [L(1)], [L(2)], [M(0)], [M(1)], [M(2)], l
    assert data["pic_classes"]["Ldp0"] == [-1, 0, -1, 0, 0, 0, 1]
    assert data["pic_classes"]["Lp0"] == [-1, -1, 0, -1, -1, -1, 2]


@pytest.mark.parametrize("case,factors", [("st-rank5", [3]), ("s-rank5", [3]), ("manin", [3, 3])])
def test_cohomology_named_cases(case, factors, capsys):
    code, data = run_json(capsys, "cohomology", case)
    assert code == 0 and data["invariant_factors"] == factors


def test_cohomology_from_coefficients(capsys):
    code, data = run_json(capsys, "cohomology", "--a", "1", "--b", "2", "--c", "3", "--d", "6")
    assert code == 0 and data["invariant_factors"] == [] and data["group_order"] == 9


def test_verify_passes(capsys):
    assert run(["verify", "--check", "geometry", "--check", "step1"]) == 0
    out = capsys.readouterr().out
    assert "PASS geometry" in out and "PASS step1" in out


def test_verify_injected_fault_exits_1(capsys):
    code, data = run_json(capsys, "verify", "--check", "geometry", "--inject-fault", "s-matrix")
    assert code == 1
    assert data[0]["status"] == "fail" and data[0]["diff"]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert run(["classify", "--a", "1", "--b", "1", "--c", "2", "--d", "3",
                "--format", "json", "--output", str(target)]) == 0
    assert json.loads(target.read_text())["structure"] == "Z3"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diagcubic", "verify"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.count("PASS") == 5
    assert "certified: d^{1,1}[φ] ≠ 0 ⇒ Br(V)/Br(F) = 0" in proc.stdout
