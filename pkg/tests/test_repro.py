import json

import pytest

from arcfact.core.config import settings_override
from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, ResourceLimitError
from arcfact.core.fingerprint import compute_report_fingerprint, strip_timing
from arcfact.repro import CASES, CASES_BY_ID, DISCLOSURE, ReproCase, exit_code_for, run_case, run_repro, select_cases


def make_case(run, expected=None):
    return ReproCase(
        id="synthetic",
        description="synthetic case",
        stage="numtheory",
        procedure="ppd-value",
        builder="none",
        provenance="TRIVIAL",
        reference="none",
        expected=expected or {"value": 1},
        run=run,
    )


def test_case_ids_are_unique_and_tagged():
    ids = [c.id for c in CASES]
    assert len(ids) == len(set(ids))
    for case in CASES:
        assert case.provenance in ("CITED", "TRIVIAL", "DERIVED")
        assert case.reference
        assert case.expected


def test_required_case_ids_present():
    for cid in ("ppd-2-6", "ppd-3-2", "table1-row1", "table1-row2", "criteria-equivalence", "digraph-battery"):
        assert cid in CASES_BY_ID
    assert len(select_cases("dihedral-*")) == 7


def test_select_cases_with_several_patterns():
    chosen = [c.id for c in select_cases("ppd-*, legendre-bound")]
    assert chosen == ["legendre-bound", "ppd-2-6", "ppd-3-2"]


def test_select_unknown_case():
    with pytest.raises(InvalidArgumentError):
        select_cases("ppd-*,nope")


def test_bad_provenance_is_rejected():
    with pytest.raises(InvalidArgumentError):
        ReproCase(
            id="x", description="", stage="numtheory", procedure="ppd-value", builder="",
            provenance="GUESSED", reference="", expected={}, run=lambda: {},
        )


def test_run_case_statuses():
    assert run_case(make_case(lambda: {"value": 1}))["status"] == "pass"
    assert run_case(make_case(lambda: {"value": 2}))["status"] == "fail"

    def limited():
        raise ResourceLimitError("elements", 10, 20)

    record = run_case(make_case(limited))
    assert record["status"] == "resource-limit"
    assert record["bound"] == {"name": "elements", "value": 10, "requested": 20}

    def broken():
        raise InternalInvariantError("criteria disagree")

    assert run_case(make_case(broken))["status"] == "fail"

    def crashed():
        raise KeyError("x")

    assert run_case(make_case(crashed))["status"] == "error"


def test_exit_codes():
    assert exit_code_for({"summary": {"pass": 3, "fail": 0, "resource-limit": 0, "error": 0}}) == 0
    assert exit_code_for({"summary": {"pass": 3, "fail": 0, "resource-limit": 1, "error": 0}}) == 2
    assert exit_code_for({"summary": {"pass": 3, "fail": 1, "resource-limit": 1, "error": 0}}) == 1
    assert exit_code_for({"summary": {"pass": 3, "fail": 0, "resource-limit": 0, "error": 1}}) == 1


def test_numtheory_cases_pass():
    code, report = run_repro("ppd-*,zsigmondy-grid,legendre-bound")
    assert code == 0
    assert report["summary"]["pass"] == 4
    by_id = {c["id"]: c for c in report["cases"]}
    assert by_id["ppd-2-6"]["observed"]["primes"] == [7]
    assert by_id["ppd-3-2"]["observed"]["primes"] == []
    assert report["disclosure"] == DISCLOSURE


def test_report_is_deterministic(tmp_path):
    out = tmp_path / "report.json"
    _, first = run_repro("ppd-*", out=out)
    _, second = run_repro("ppd-*", out=out)
    _, third = run_repro("ppd-*", out=out)
    assert "deterministic_with_previous" not in first
    assert first["fingerprint"] == second["fingerprint"] == third["fingerprint"]
    assert second["deterministic_with_previous"] is True
    assert third["deterministic_with_previous"] is True
    assert strip_timing(first) == strip_timing({k: v for k, v in second.items() if k != "deterministic_with_previous"})
    saved = json.loads(out.read_text(encoding="utf-8"))
    assert saved["fingerprint"] == compute_report_fingerprint(saved)


def test_report_records_settings():
    with settings_override(seed=5):
        _, report = run_repro("ppd-3-2")
    assert report["settings"]["seed"] == 5
    assert report["cases"][0]["provenance"] == "TRIVIAL"


def test_factorization_cases_pass():
    code, report = run_repro("fact-*")
    assert code == 0
    assert report["summary"]["pass"] == 3


def test_small_dihedral_cases_pass():
    code, report = run_repro("dihedral-psl2-9-d8,dihedral-pgl2-9-d16,dihedral-psl2-7-d8")
    assert code == 0
    for case in report["cases"]:
        assert case["observed"]["pairs"] == 0


@pytest.mark.slow
def test_full_suite_passes():
    code, report = run_repro()
    assert code == 0
    assert report["summary"]["fail"] == 0
    assert report["summary"]["pass"] == len(CASES)


def test_natural_factorizations_cover_degree_7_only_when_extended(monkeypatch):
    import arcfact.repro.cases as cases

    monkeypatch.setattr(cases, "factorizations", lambda G: [])
    run = CASES_BY_ID["natural-factorizations"].run
    with settings_override(profile="desk"):
        desk = run()["factorizations"]
    with settings_override(profile="extended"):
        extended = run()["factorizations"]
    assert "S:7" not in desk and "A:7" not in desk
    assert set(extended) == set(desk) | {"S:7", "A:7"}
