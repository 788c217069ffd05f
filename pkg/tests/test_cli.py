"""Command line behavior: rendering, exit codes, determinism."""

import json
import subprocess
import sys

import jsonschema
import pytest

from ratcone import CERTIFICATE_SCHEMA, REPORT_SCHEMA
from ratcone.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cohomology_surface_text(capsys):
    code, out, err = run_cli(
        capsys, "cohomology", "--genus", "2", "--class", "1,1"
    )
    assert code == 0 and err == ""
    assert out == (
        "cohomology of (1,1) on C x P1: genus 2, generic point\n"
        "h0 = 2\n"
        "h1 = 2\n"
        "h2 = 0\n"
    )


def test_cohomology_curve_interval_text(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--genus", "3", "--mode", "arbitrary", "--curve-n", "4"
    )
    assert code == 0
    assert "cohomology of O(4Q) on C: genus 3, arbitrary point" in out
    assert "h0 in [2,3]" in out
    assert "h1 in [0,1]" in out


def test_cohomology_json(capsys):
    code, out, _ = run_cli(
        capsys, "cohomology", "--genus", "2", "--class", "1,1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["h0"] == {"exact": 2}
    assert payload["h1"] == {"exact": 2}
    assert payload["h2"] == {"exact": 0}
    assert payload["header"]["tool"] == "ratcone"


def test_cone_check_text(capsys):
    code, out, _ = run_cli(
        capsys, "cone-check", "--genus", "2", "--L", "1,1", "--D", "0,0"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "cone-check: genus 2, generic point, L=(1,1), D=(0,0)"
    assert lines[1] == "verdict: witness"
    assert lines[2] == "witness: i=1 m=0 h=2"
    assert lines[3] == "bound m0: 3"
    assert lines[4].startswith("assumptions: rational pair hypothesis assumed")


def test_cone_check_all_vanish_text(capsys):
    code, out, _ = run_cli(
        capsys, "cone-check", "--genus", "0", "--L", "1,1", "--D", "0,0"
    )
    assert code == 0
    assert "verdict: all_vanish" in out
    assert "h^i(m*L - D) = 0 for i in {1,2} and 0 <= m <= 0" in out


def test_cone_check_indeterminate_text(capsys):
    code, out, _ = run_cli(
        capsys,
        "cone-check",
        "--genus", "3",
        "--mode", "arbitrary",
        "--L", "1,3",
        "--D", "1,0",
    )
    assert code == 0
    assert "verdict: indeterminate" in out
    assert "indeterminate at: i=1 m=1" in out


def test_cone_check_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "cone-check", "--genus", "2", "--L", "1,1", "--D", "3,1",
        "--format", "json",
    )
    assert code == 0
    jsonschema.validate(json.loads(out), CERTIFICATE_SCHEMA)


def test_search_text_and_rationalizer(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--genus", "1", "--L", "1,1", "--grid", "3,3"
    )
    assert code == 0
    assert "verdict: rationalizer_found" in out
    assert "rationalizer: (1,0)" in out
    # the twist prediction is a genus >= 2 heuristic, so no pattern claim here
    assert "a=0 b=0 witness i=1 m=0 h=1 pattern=false" in out
    assert "a=1 b=0 all_vanish" in out


def test_search_closed_form_text(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--genus", "2", "--L", "1,1", "--grid", "2,2"
    )
    assert code == 0
    assert "verdict: nonexistence_proved" in out
    assert "closed form (L=(1,1), valid for every genus >= 2):" in out
    assert "a = b+2: witness m=b, h1 = 1, minimum 1" in out
    assert "pattern match: 9/9" in out


def test_search_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--genus", "2", "--L", "1,1", "--grid", "4,4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, REPORT_SCHEMA)
    assert payload["verdict"] == "nonexistence_proved"


def test_usage_error_exits_2_on_bad_pair():
    with pytest.raises(SystemExit) as info:
        main(["cone-check", "--genus", "2", "--L", "1;1", "--D", "0,0"])
    assert info.value.code == 2


def test_precondition_errors_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "cone-check", "--genus", "2", "--L", "1,0", "--D", "0,0"
    )
    assert code == 2
    assert "error:" in err and "ample" in err
    code, _, err = run_cli(
        capsys, "cohomology", "--genus", "-1", "--class", "1,1"
    )
    assert code == 2
    assert "genus" in err


def test_output_is_deterministic(capsys):
    argv = ["search", "--genus", "2", "--L", "1,1", "--grid", "5,5", "--format", "json"]
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_output_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, out, _ = run_cli(
        capsys,
        "cone-check", "--genus", "2", "--L", "1,1", "--D", "0,0",
        "--format", "json", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    jsonschema.validate(json.loads(target.read_text()), CERTIFICATE_SCHEMA)


def test_reproduce_passes(capsys):
    code, out, _ = run_cli(capsys, "reproduce")
    assert code == 0
    assert "nonexistence proved; 2601/2601 grid certificates valid; pattern match 100%" in out
    assert "cone point at D=(0,0): non-rational, witness i=1 m=0 h=2; h1(X, L) = 2" in out
    assert "top cohomology of m*L: PASS" in out
    assert out.rstrip().endswith("overall: PASS")


def test_reproduce_json(capsys):
    code, out, _ = run_cli(capsys, "reproduce", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] == "pass"
    assert payload["summary"] == {
        "verdict": "nonexistence_proved",
        "cells_total": 2601,
        "cells_valid": 2601,
        "pattern_matches": 2601,
    }
    jsonschema.validate(payload["cone_point"], CERTIFICATE_SCHEMA)


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "ratcone", "cohomology", "--genus", "0", "--class", "0,0"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "h0 = 1" in result.stdout
