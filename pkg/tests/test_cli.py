import json
import shutil

import pytest

from hopfschur.cli import _strip_timings, main

from conftest import CONFIGS, FIXTURES, GOLDEN


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def failing(doc):
    return [c for c in doc["checks"] if not c["passed"]]


def test_quaternion_pipeline_passes(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "pipeline", "--config", str(CONFIGS / "quaternion.json"),
                           "--out", str(tmp_path))
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass"
    assert doc["dims"]["H"] == 16 and doc["dims"]["A"] == 4
    assert all(c["anchor"] for c in doc["checks"])
    assert (tmp_path / "report.json").read_text() == out
    assert set(doc) == {"tool", "command", "config_digest", "status", "checks", "dims",
                        "results", "timings"}


def test_reports_are_byte_stable_modulo_timings(capsys):
    args = ("pipeline", "--config", str(CONFIGS / "split_qi.json"))
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    a, b = json.loads(first), json.loads(second)
    assert _strip_timings(a) == _strip_timings(b)
    strip = lambda s: [line for line in s.splitlines() if "timings" not in line and ": 0." not in line]
    assert strip(first) == strip(second)


def test_field_quotient_zeta5(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "field-quotient", "--config",
                           str(CONFIGS / "zeta5_field_quotient.json"), "--out", str(tmp_path))
    doc = json.loads(out)
    assert code == 0 and doc["dims"]["H"] == 4
    assert len(list(tmp_path.iterdir())) > 1


def test_forms_with_jobs(capsys):
    cfg = str(CONFIGS / "forms_235.json")
    c1, o1, _ = run_cli(capsys, "forms", "--config", cfg)
    c2, o2, _ = run_cli(capsys, "forms", "--config", cfg, "--jobs", "2")
    assert c1 == c2 == 0
    assert _strip_timings(json.loads(o1)) == _strip_timings(json.loads(o2))


def test_finitize_config(capsys):
    code, out, _ = run_cli(capsys, "finitize", "--config", str(CONFIGS / "finitize_biquadratic.json"))
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_inversion_form_config(capsys):
    code, out, _ = run_cli(capsys, "forms", "--config", str(CONFIGS / "inversion_form_cubic.json"))
    assert code == 0, out


# -- negative paths ---------------------------------------------------------------------------

def test_corrupted_antipode_names_axiom_and_index(capsys):
    code, out, _ = run_cli(capsys, "verify", "--in", str(FIXTURES / "corrupted_antipode.json"))
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "fail"
    bad = failing(doc)
    assert {c["name"] for c in bad} == {"antipode (S (x) id)", "antipode (id (x) S)"}
    assert all(c["counterexample"] == 1 for c in bad)


def test_non_cocycle_names_triple(capsys):
    code, out, _ = run_cli(capsys, "verify", "--in", str(CONFIGS / "non_cocycle.json"))
    bad = failing(json.loads(out))
    assert code == 1
    assert [(c["name"], c["counterexample"]) for c in bad] == [("2-cocycle identity", [1, 1, 1])]


def test_non_cocycle_pipeline_stops_with_report(capsys):
    code, out, _ = run_cli(capsys, "pipeline", "--config", str(CONFIGS / "pipeline_non_cocycle.json"))
    assert code == 1
    assert [c["counterexample"] for c in failing(json.loads(out))] == [[1, 1, 1]]


def test_bad_rational_is_a_parse_error(capsys):
    code, out, err = run_cli(capsys, "dump", "--in", str(FIXTURES / "bad_rational.json"))
    assert code == 2 and out == ""
    assert "$.mult_constants[1][1][0]" in err and "1/0" in err


def test_missing_file_and_bad_flags(capsys, tmp_path):
    assert run_cli(capsys, "verify", "--in", str(tmp_path / "nope.json"))[0] == 2
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_max_dim_guard(capsys):
    code, _, err = run_cli(capsys, "pipeline", "--config", str(CONFIGS / "quaternion.json"),
                           "--max-dim", "8")
    assert code == 2 and "--max-dim" in err


# -- dump and golden files ----------------------------------------------------------------------

def test_dump_matches_golden_and_is_idempotent(capsys, tmp_path):
    golden = GOLDEN / "qz2_group_algebra.json"
    code, once, _ = run_cli(capsys, "dump", "--in", str(golden))
    assert code == 0 and once == golden.read_text()
    again_path = tmp_path / "again.json"
    again_path.write_text(once)
    assert run_cli(capsys, "dump", "--in", str(again_path))[1] == once


def test_golden_hopf_document_verifies(capsys):
    code, out, _ = run_cli(capsys, "verify", "--in", str(GOLDEN / "qz2_group_algebra.json"))
    assert code == 0 and json.loads(out)["dims"]["H"] == 2


def test_golden_directory_comparison(capsys, tmp_path):
    cfg = str(CONFIGS / "quaternion.json")
    code, _, _ = run_cli(capsys, "pipeline", "--config", cfg, "--golden", str(GOLDEN / "quaternion"))
    assert code == 0
    # a tampered expectation is reported as a failed check
    tampered = tmp_path / "golden"
    shutil.copytree(GOLDEN / "quaternion", tampered)
    doc = json.loads((tampered / "report.json").read_text())
    doc["dims"]["H"] = 17
    (tampered / "report.json").write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "pipeline", "--config", cfg, "--golden", str(tampered))
    assert code == 1
    assert [c["name"] for c in failing(json.loads(out))] == ["golden report.json"]


def test_golden_directory_missing(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "pipeline", "--config", str(CONFIGS / "quaternion.json"),
                           "--golden", str(tmp_path))
    assert code == 1 and failing(json.loads(out))[0]["name"] == "golden expectations present"
