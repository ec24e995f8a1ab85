"""
Nodes of the reproduction graph: case selection, one node per stage, and the report.
"""

import time
from collections import Counter
from datetime import datetime, timezone
from typing import Any, Dict, List

from arcfact import __version__
from arcfact.core.errors import InternalInvariantError, ResourceLimitError
from arcfact.core.fingerprint import compute_report_fingerprint
from .cases import CASES_BY_ID, DISCLOSURE, ReproCase
from .state import ReproState

UTC = timezone.utc

PASS = "pass"
FAIL = "fail"
LIMIT = "resource-limit"
ERROR = "error"


def run_case(case: ReproCase) -> Dict[str, Any]:
    """
    Run one case and classify the outcome.

    InternalInvariantError counts as a failed check, ResourceLimitError as a
    limit (never a pass), anything else as an error.
    """
    record: Dict[str, Any] = {**case.describe(), "observed": None, "message": None}
    start = time.perf_counter()
    try:
        observed = case.run()
        record["observed"] = observed
        record["status"] = PASS if case.evaluate(observed) else FAIL
    except InternalInvariantError as e:
        record["status"] = FAIL
        record["message"] = str(e)
    except ResourceLimitError as e:
        record["status"] = LIMIT
        record["message"] = str(e)
        record["bound"] = {"name": e.bound_name, "value": e.bound, "requested": e.requested}
    except Exception as e:
        record["status"] = ERROR
        record["message"] = f"{type(e).__name__}: {e}"
    record["elapsed_s"] = round(time.perf_counter() - start, 3)
    return record


def _stage_node(stage: str):
    tag = f"[{stage.capitalize()}]"

    def node(state: ReproState) -> Dict[str, Any]:
        cases = [CASES_BY_ID[cid] for cid in state["selected"] if CASES_BY_ID[cid].stage == stage]
        if not cases:
            return {}
        results: List[Dict[str, Any]] = []
        logs: List[str] = []
        print(f"{tag} Running {len(cases)} case(s)...")
        for case in cases:
            record = run_case(case)
            line = f"{tag} {case.id}: {record['status']} ({record['elapsed_s']}s)"
            if record["message"]:
                line += f" {record['message']}"
            print(line)
            results.append(record)
            logs.append(line)
        return {"results": results, "logs": logs}

    node.__name__ = f"{stage}_node"
    return node


numtheory_node = _stage_node("numtheory")
factorization_node = _stage_node("factorization")
homogeneous_node = _stage_node("homogeneous")
digraph_node = _stage_node("digraph")


def select_node(state: ReproState) -> Dict[str, Any]:
    started = datetime.now(UTC).isoformat()
    line = f"[Select] {len(state['selected'])} case(s) selected"
    print(line)
    return {"started_at": started, "logs": [line]}


def report_node(state: ReproState) -> Dict[str, Any]:
    """Assemble the report: cases sorted by id, status counts, disclosure and settings."""
    cases = sorted(state["results"], key=lambda r: r["id"])
    summary = Counter(r["status"] for r in cases)
    report = {
        "tool": "arcfact",
        "version": __version__,
        "case_filter": state.get("case_filter"),
        "settings": state["settings"],
        "summary": {status: summary.get(status, 0) for status in (PASS, FAIL, LIMIT, ERROR)},
        "cases": cases,
        "disclosure": DISCLOSURE,
        "started_at": state.get("started_at"),
    }
    report["fingerprint"] = compute_report_fingerprint(report)
    line = "[Report] " + ", ".join(f"{k}={v}" for k, v in report["summary"].items())
    print(line)
    return {"report": report, "logs": [line]}
