"""Reproduction suite: built-in cases run through a LangGraph pipeline."""

from .cases import CASES, CASES_BY_ID, DISCLOSURE, ReproCase, select_cases
from .nodes import run_case
from .workflow import create_repro_graph, exit_code_for, run_repro

__all__ = [
    "CASES",
    "CASES_BY_ID",
    "DISCLOSURE",
    "ReproCase",
    "select_cases",
    "run_case",
    "create_repro_graph",
    "exit_code_for",
    "run_repro",
]
