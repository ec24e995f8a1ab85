"""
Structural audits of coset digraphs: normal subgroups of the vertex
stabilizer, vertex-primitivity, the valency dichotomy for primitive
digraphs, and arc-transitivity of normal subgroups.
"""

from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, PreconditionError
from arcfact.perm import PermGroup, PrimitivityResult, Subgroup, enumerate_normal_subgroups, is_primitive
from .arcs import s_arc_orbit_size, s_arcs_direct
from .coset_digraph import CosetDigraph

PRIME_CYCLE = "prime-directed-cycle"
VALENCY_AT_LEAST_3 = "valency>=3"
COUNTEREXAMPLE = "counterexample"


@dataclass
class NormalizedSubgroupAudit:
    passed: bool
    checked: int
    offending: Optional[Subgroup] = None

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "offending": None
            if self.offending is None
            else {"order": self.offending.order, "generators": [g.to_cycle_string() for g in self.offending.generators]},
        }


def lemma26_audit(digraph: CosetDigraph, bound: Optional[int] = None) -> NormalizedSubgroupAudit:
    """
    Check that no nontrivial normal subgroup N of H satisfies N^g = N.

    A violation means G does not act faithfully and connectedly, since such
    an N would be normal in <H, g>.
    """
    if not digraph.connected:
        raise PreconditionError("lemma26_audit needs a connected digraph")
    H, g = digraph.subgroup, digraph.g
    normals = [N for N in enumerate_normal_subgroups(H, bound=bound) if not N.is_trivial()]
    for N in normals:
        image = PermGroup(H.degree, [x.conjugate_by(g) for x in N.generators])
        if image.same_as(N):
            return NormalizedSubgroupAudit(passed=False, checked=len(normals), offending=N)
    return NormalizedSubgroupAudit(passed=True, checked=len(normals))


def vertex_primitivity(digraph: CosetDigraph) -> PrimitivityResult:
    """Primitivity of G on the vertices."""
    return is_primitive(digraph.action())


def valency_or_cycle_audit(digraph: CosetDigraph) -> str:
    """
    Classify a vertex-primitive digraph as a directed cycle of prime length
    or of valency at least 3; anything else is a counterexample.

    Raises:
        PreconditionError: the vertex action is imprimitive
    """
    if not vertex_primitivity(digraph).primitive:
        raise PreconditionError("valency_or_cycle_audit needs a vertex-primitive digraph")
    if digraph.valency >= 3:
        return VALENCY_AT_LEAST_3
    if digraph.valency == 1 and digraph.connected and isprime(digraph.order):
        return PRIME_CYCLE
    return COUNTEREXAMPLE


@dataclass
class DescentResult:
    s: int
    level: int  # s - 1
    orbit_size: int
    n_arcs: int
    holds: bool

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "level": self.level,
            "orbit_size": self.orbit_size,
            "n_arcs": self.n_arcs,
            "holds": self.holds,
        }


def normal_subgroup_descent(digraph: CosetDigraph, L: PermGroup, s: int) -> DescentResult:
    """
    For L normal in G and vertex-transitive, with G s-arc-transitive, check by
    a direct orbit count that L is (s-1)-arc-transitive.

    Raises:
        PreconditionError: a hypothesis fails (message names which)
        InternalInvariantError: the orbit count contradicts the conclusion
    """
    if s < 1:
        raise InvalidArgumentError("s must be at least 1")
    G = digraph.group
    if not L.is_normal_in(G):
        raise PreconditionError("L is not a normal subgroup of G")
    table = digraph.table
    if len(table.orbit_of(0, L.generators)) != digraph.order:
        raise PreconditionError("L is not vertex-transitive")
    if s > 1 and not s_arcs_direct(digraph, s).transitive:
        raise PreconditionError(f"G is not {s}-arc-transitive on the digraph")

    level = s - 1
    n_arcs = digraph.order * digraph.valency**level
    if level == 0:
        orbit_size = digraph.order
    else:
        orbit_size = s_arc_orbit_size(digraph, level, acting=L)
    result = DescentResult(s=s, level=level, orbit_size=orbit_size, n_arcs=n_arcs, holds=orbit_size == n_arcs)
    if not result.holds:
        raise InternalInvariantError(
            f"normal subgroup of order {L.order} has an orbit of {orbit_size} on {n_arcs} {level}-arcs"
        )
    return result

