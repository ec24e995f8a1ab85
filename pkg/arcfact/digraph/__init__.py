"""
Coset digraphs Cos(G, H, g) and their s-arc-transitivity.
"""

from .coset_digraph import CosetDigraph, build
from .arcs import (
    ArcCountResult,
    CriterionResult,
    StabilizerChainAlongArc,
    arc_stabilizer,
    arc_transitivity,
    count_s_arcs,
    s_arc_criterion,
    s_arc_orbit_size,
    s_arcs_direct,
    valency_power_divides,
)
from .audits import (
    COUNTEREXAMPLE,
    PRIME_CYCLE,
    VALENCY_AT_LEAST_3,
    DescentResult,
    NormalizedSubgroupAudit,
    lemma26_audit,
    normal_subgroup_descent,
    valency_or_cycle_audit,
    vertex_primitivity,
)
from .battery import Battery, BatteryInstance, catalog_battery, directed_cycle, group_instances, wreath_digraph

__all__ = [
    "CosetDigraph",
    "build",
    "ArcCountResult",
    "CriterionResult",
    "StabilizerChainAlongArc",
    "arc_stabilizer",
    "arc_transitivity",
    "count_s_arcs",
    "s_arc_criterion",
    "s_arc_orbit_size",
    "s_arcs_direct",
    "valency_power_divides",
    "COUNTEREXAMPLE",
    "PRIME_CYCLE",
    "VALENCY_AT_LEAST_3",
    "DescentResult",
    "NormalizedSubgroupAudit",
    "lemma26_audit",
    "normal_subgroup_descent",
    "valency_or_cycle_audit",
    "vertex_primitivity",
    "Battery",
    "BatteryInstance",
    "catalog_battery",
    "directed_cycle",
    "group_instances",
    "wreath_digraph",
]
