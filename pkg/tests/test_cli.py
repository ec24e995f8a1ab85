import json

import pytest

from arcfact.cli import main
from arcfact.core.config import settings_override


@pytest.fixture(autouse=True)
def restore_settings():
    # main() reconfigures the active settings from its flags
    with settings_override():
        yield


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_ppd_json(capsys):
    code, payload = run_json(capsys, "ppd", "2", "6")
    assert code == 0
    assert payload["primes"] == [7]
    assert payload["exceptional"] is True


def test_ppd_text(capsys):
    assert main(["ppd", "2", "4"]) == 0
    assert "{5}" in capsys.readouterr().out


def test_ppart(capsys):
    code, payload = run_json(capsys, "ppart", "720", "3")
    assert code == 0 and payload["value"] == 9
    code, payload = run_json(capsys, "ppart", "10", "2", "--factorial")
    assert payload["exponent"] == 8 and payload["bound_holds"]


def test_group_summary(capsys):
    code, payload = run_json(capsys, "group", "PSL2:7")
    assert code == 0
    assert payload["order"] == "168"
    assert payload["degree"] == 8
    assert payload["transitivity_degree"] == 2
    assert payload["primitivity"]["primitive"]


def test_fact(capsys):
    code, payload = run_json(
        capsys, "fact", "--group", "S:6", "--h", "PGL2:5", "--k", "wr(S:3,2)", "--cross-check"
    )
    assert code == 0
    assert payload["verdict"] is True
    assert payload["order_intersection"] == "12"
    assert len(payload["criteria_checked"]) == 3


def test_fact_with_generator_lists(capsys):
    code, payload = run_json(capsys, "fact", "--group", "S:5", "--h", "(2,3,4,5);(2,3)", "--k", "(1,2,3,4,5)")
    assert code == 0
    assert payload["verdict"] is True
    assert payload["order_intersection"] == "1"


def test_homfact_both_modes(capsys):
    code, payload = run_json(capsys, "homfact", "--gv", "direct(S:3,S:3)", "--mode", "both")
    assert code == 0
    assert [r["mode"] for r in payload["reports"]] == ["conjugate-in-ambient", "order-and-profile-isomorphic"]


def test_digraph_check(capsys):
    code, payload = run_json(
        capsys,
        "digraph",
        "--group", "gens(6:(1,2);(1,3,5)(2,4,6))",
        "--h", "(3,4);(5,6)",
        "--g", "(1,3,5)(2,4,6)",
        "--check", "s=2",
        "--check", "s=3",
    )
    assert code == 0
    assert payload["valency"] == 2
    assert payload["connected"] and payload["antisymmetric"]
    assert payload["primitive"] is False
    assert payload["group_order"] == "24"
    assert [r["transitive"] for r in payload["s_results"]] == [True, False]
    for r in payload["s_results"]:
        assert r["method"] == "both"
        assert set(r["certificates"]) == {"direct", "criterion"}


def test_not_a_digraph_exit_code(capsys):
    code = main(["digraph", "--group", "C:2", "--h", "()", "--g", "(1,2)"])
    assert code == 3
    assert "[ERROR]" in capsys.readouterr().err


def test_parse_error_json(capsys):
    code, payload = run_json(capsys, "fact", "--group", "S:4", "--h", "(1,2", "--k", "(1,2,3,4)")
    assert code == 3
    assert payload["error"]["kind"] == "parse-error"


def test_resource_limit_exit_code(capsys):
    code = main(["--bound-subgroups", "100", "homfact", "--gv", "A:6"])
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["digraph", "--group", "S:4", "--h", "()", "--g", "(1,2)", "--check", "t=2"])
    assert info.value.code == 3


def test_repro_list(capsys):
    code, payload = run_json(capsys, "repro", "--list")
    assert code == 0
    ids = [c["id"] for c in payload["cases"]]
    assert "ppd-2-6" in ids and "table1-row1" in ids
    assert all(c["provenance"] in ("CITED", "TRIVIAL", "DERIVED") for c in payload["cases"])


def test_repro_unknown_case(capsys):
    assert main(["repro", "no-such-case"]) == 3


@pytest.mark.parametrize("spec, orbits", [("direct(S:3,S:3)", [3, 3]), ("gens(5:(1,2))", [2, 1, 1, 1])])
def test_group_summary_of_intransitive_group(capsys, spec, orbits):
    code, payload = run_json(capsys, "group", spec)
    assert code == 0
    assert sorted(payload["orbits"], reverse=True) == orbits
    assert payload["transitivity_degree"] == 0
    assert payload["primitivity"] is None


def test_orders_are_decimal_strings(capsys):
    code, payload = run_json(capsys, "homfact", "--gv", "direct(S:3,S:3)", "--mode", "iso")
    assert code == 0
    report = payload["reports"][0]
    assert report["group_order"] == "36"
    for pair in report["pairs"]:
        assert isinstance(pair["a"]["order"], str)
        assert isinstance(pair["intersection_order"], str)
        assert isinstance(pair["index"], int)


def test_digraph_orbit_method(capsys):
    code, payload = run_json(
        capsys,
        "digraph",
        "--group", "gens(6:(1,2);(1,3,5)(2,4,6))",
        "--h", "(3,4);(5,6)",
        "--g", "(1,3,5)(2,4,6)",
        "--check", "s=2",
        "--method", "orbit",
    )
    assert code == 0
    result = payload["s_results"][0]
    assert result["transitive"] and result["method"] == "orbit"
    assert result["certificates"]["orbit"]["orbit_size"] == 24
