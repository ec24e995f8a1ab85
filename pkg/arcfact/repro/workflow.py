"""
LangGraph workflow for the reproduction suite.
Runs the selected cases stage by stage and assembles the JSON report.
"""

from pathlib import Path
from typing import Dict, Optional, Tuple

from langgraph.graph import END, StateGraph

from arcfact.core.config import active_settings
from arcfact.core.fingerprint import load_report, save_report
from .cases import select_cases
from .nodes import (
    ERROR,
    FAIL,
    LIMIT,
    digraph_node,
    factorization_node,
    homogeneous_node,
    numtheory_node,
    report_node,
    select_node,
)
from .state import ReproState, create_initial_state


def create_repro_graph():
    """
    Create the LangGraph reproduction graph.

    Returns:
        Compiled StateGraph
    """
    workflow = StateGraph(ReproState)

    workflow.add_node("select", select_node)
    workflow.add_node("numtheory", numtheory_node)
    workflow.add_node("factorization", factorization_node)
    workflow.add_node("homogeneous", homogeneous_node)
    workflow.add_node("digraph", digraph_node)
    workflow.add_node("report", report_node)

    workflow.set_entry_point("select")
    workflow.add_edge("select", "numtheory")
    workflow.add_edge("numtheory", "factorization")
    workflow.add_edge("factorization", "homogeneous")
    workflow.add_edge("homogeneous", "digraph")
    workflow.add_edge("digraph", "report")
    workflow.add_edge("report", END)

    return workflow.compile()


def exit_code_for(report: Dict) -> int:
    """0 when every case passed, 1 on any failure or error, otherwise 2 on any resource limit."""
    summary = report["summary"]
    if summary.get(FAIL) or summary.get(ERROR):
        return 1
    if summary.get(LIMIT):
        return 2
    return 0


def run_repro(case_filter: Optional[str] = None, out: Optional[Path] = None) -> Tuple[int, Dict]:
    """
    Run the built-in reproduction cases.

    Args:
        case_filter: Comma-separated glob patterns over case ids (all cases when None)
        out: Where to write the JSON report; an earlier report there is compared by fingerprint

    Returns:
        (exit code, report)

    Raises:
        InvalidArgumentError: a pattern matches no case
    """
    cases = select_cases(case_filter)
    settings = active_settings().as_dict()

    print(f"\n{'='*60}")
    print(f"Reproduction run: {len(cases)} case(s), profile {settings['profile']}")
    print(f"{'='*60}\n")

    graph = create_repro_graph()
    final_state = graph.invoke(create_initial_state(case_filter, [c.id for c in cases], settings))
    report = final_state["report"]

    if out is not None:
        previous = load_report(out)
        save_report(report, out)
        print(f"[Report] [OK] saved to {out}")
        # the stored fingerprint is the in-graph one
        if previous is not None and previous.get("fingerprint"):
            same = previous["fingerprint"] == report["fingerprint"]
            print(f"[Report] fingerprint {'matches' if same else 'differs from'} the previous report at {out}")
            report["deterministic_with_previous"] = same

    code = exit_code_for(report)
    print(f"\n{'='*60}")
    print(f"Reproduction complete (exit {code})")
    print(f"{'='*60}\n")
    return code, report
