"""
State for the reproduction graph.
"""

import operator
from typing import Any, Dict, List, Optional

from typing_extensions import Annotated, TypedDict


class ReproState(TypedDict):
    """
    Shared state for the reproduction workflow.
    """
    case_filter: Optional[str]
    selected: List[str]
    results: Annotated[List[Dict[str, Any]], operator.add]
    logs: Annotated[List[str], operator.add]
    settings: Dict[str, Any]
    started_at: Optional[str]
    report: Optional[Dict[str, Any]]


def create_initial_state(case_filter: Optional[str], selected: List[str], settings: Dict[str, Any]) -> ReproState:
    """
    Create initial state for a reproduction run.

    Args:
        case_filter: Pattern the case ids were selected with
        selected: Case ids to run
        settings: Active settings, recorded in the report

    Returns:
        Initial state
    """
    return {
        "case_filter": case_filter,
        "selected": list(selected),
        "results": [],
        "logs": [],
        "settings": dict(settings),
        "started_at": None,
        "report": None,
    }
