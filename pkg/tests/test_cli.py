import json

import pytest

from erings.cli import (
    EXIT_CAPABILITY,
    EXIT_FAILURES,
    EXIT_PASS,
    EXIT_UNDECIDED,
    EXIT_USAGE,
    ModelError,
    SuiteRequest,
    emit_report,
    load_model,
    main,
    run_suite,
)
from erings.report import SampleStrategy, replay

Z2 = {"kind": "function_ring", "atoms": [["x"], ["y"]], "values": "int"}
Q2 = {"kind": "function_ring", "atoms": [["x"], ["y"]], "values": "rat", "grid": 4}
M2 = {"kind": "matrix", "dim": 2}


@pytest.fixture
def model(tmp_path):
    def write(obj, name="model.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return write


def test_load_examples(model):
    c = load_model(model(Z2))
    assert c.kind == "function_ring" and c.n_atoms == 2 and len(c.enumerate_E()) == 4
    assert load_model(model(M2)).n == 2
    prod = load_model(model({"kind": "product", "left": Z2, "right": M2}))
    assert prod.kind == "product"


@pytest.mark.parametrize("obj, where", [
    ({"kind": "function_ring", "atoms": []}, "$.atoms"),
    ({"kind": "function_ring", "atoms": [["x"], [3]]}, "$.atoms[1]"),
    ({"kind": "matrix", "dim": 0}, "$.dim"),
    ({"kind": "torus"}, "$.kind"),
    ({"kind": "product", "left": Z2}, "$"),
    ({"kind": "product", "left": Z2, "right": {"kind": "matrix"}}, "$.right"),
    ({**Z2, "mutation": "nope"}, "$.mutation"),
])
def test_model_diagnostics(model, obj, where):
    with pytest.raises(ModelError) as exc:
        load_model(model(obj))
    assert exc.value.where == where


def test_parse_error_has_line(model):
    with pytest.raises(ModelError) as exc:
        load_model(model('{\n  "kind": "matrix",\n  "dim": \n}'))
    assert exc.value.where.startswith("line 4")


def test_run_suite_statuses(model):
    s = SampleStrategy(seed=0, case_budget=50)
    c = load_model(model(Z2))
    assert run_suite(SuiteRequest("axioms", SampleStrategy.auto(c)), c)[1] == EXIT_PASS
    q = load_model(model(Q2))
    report, status = run_suite(SuiteRequest("bring", s), q)
    assert status == EXIT_PASS
    assert any("condition 6: False" in n for n in report.notes)
    bad = load_model(model({**Z2, "mutation": "drop_orthosupplement"}))
    report, status = run_suite(SuiteRequest("axioms", SampleStrategy.auto(bad)), bad)
    assert status == EXIT_FAILURES
    assert not replay(bad, report.failures[0])


def test_emit_report_formats(model, tmp_path):
    c = load_model(model(Z2))
    report, _ = run_suite(SuiteRequest("axioms", SampleStrategy.auto(c)), c)
    text = emit_report(report, "text", tmp_path / "r.txt")
    assert "0 failures" in text and "ering.vi" in text
    assert (tmp_path / "r.txt").read_text() == text
    data = json.loads(emit_report(report, "json"))
    assert set(data) >= {"schema_version", "model", "suite", "strategy", "cases_total",
                         "failures", "undecided", "verdict"}
    assert data["verdict"] == "pass" and "verdict: pass" in text
    with pytest.raises(OSError):
        emit_report(report, "json", tmp_path / "missing" / "r.json")


def test_failure_json_is_replayable(model):
    bad = load_model(model({**Z2, "mutation": "two_sided_cone"}))
    report, _ = run_suite(SuiteRequest("axioms", SampleStrategy.auto(bad)), bad)
    data = json.loads(emit_report(report, "json"))
    assert data["verdict"] == "fail"
    assert all(not replay(bad, f) for f in data["failures"][:10])
    assert "fail" in emit_report(report, "text")


def test_main_exit_codes(model, tmp_path, capsys):
    z = model(Z2, "z.json")
    assert main(["verify", "--model", z, "--suite", "axioms"]) == EXIT_PASS
    assert main(["verify", "--model", model(Q2, "q.json"), "--suite", "stone"]) == EXIT_CAPABILITY
    assert main(["verify", "--model", model({"kind": "function_ring", "atoms": []}, "e.json"),
                 "--suite", "axioms"]) == EXIT_USAGE
    assert main(["verify", "--model", str(tmp_path / "none.json"), "--suite", "axioms"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--model", z, "--suite", "nope"])
    assert exc.value.code == EXIT_USAGE
    m = model(M2, "m.json")
    assert main(["verify", "--model", m, "--suite", "axioms", "--mode", "exhaustive"]) == EXIT_CAPABILITY
    mut = model({**M2, "mutation": "left_compression"}, "mut.json")
    out = tmp_path / "mut.json.report"
    assert main(["verify", "--model", mut, "--suite", "compression", "--budget", "50",
                 "--report", str(out), "--format", "json"]) == EXIT_FAILURES
    assert json.loads(out.read_text())["failures"][0]["inputs"]


def test_strict_turns_undecided_into_exit_two(model):
    m = model(M2)
    args = ["verify", "--model", m, "--suite", "effects", "--seed", "3", "--budget", "200"]
    assert main(args) == EXIT_PASS
    assert main(args + ["--strict"]) == EXIT_UNDECIDED


def test_json_reports_are_byte_identical(model, tmp_path):
    m = model(M2)
    paths = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        main(["verify", "--model", m, "--suite", "lemmas", "--seed", "11", "--budget", "40",
              "--report", str(p), "--format", "json"])
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]


def test_all_suite_skips_inapplicable(model):
    c = load_model(model(M2))
    report, status = run_suite(SuiteRequest("all", SampleStrategy(seed=0, case_budget=20)), c)
    assert status == EXIT_PASS
    assert any(n.startswith("stone: skipped") for n in report.notes)
