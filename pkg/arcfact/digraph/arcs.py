"""
s-arc-transitivity of coset digraphs, three ways:

- direct: count s-arcs and compare with |G| / |G_{v_0..v_s}|
- criterion: factorizations G_{v_1..v_i} = G_{v_0..v_i} G_{v_1..v_{i+1}}
- orbit: explicit orbit of the canonical s-arc in the vertex action
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from arcfact.core.config import active_settings
from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, ResourceLimitError
from arcfact.factor import FactorizationCertificate, is_factorization
from arcfact.perm import PermGroup, Subgroup, conjugate, intersection
from .coset_digraph import CosetDigraph


class StabilizerChainAlongArc:
    """
    Pointwise stabilizers G_{v_a..v_b} of stretches of the canonical arc v_j = Hg^j.

    G_{v_0..v_k} = H ∩ H^g ∩ ... ∩ H^{g^k}, and G_{v_a..v_b} is the conjugate
    of G_{v_0..v_{b-a}} by g^a.
    """

    def __init__(self, digraph: CosetDigraph, s: int, bound: Optional[int] = None):
        if s < 0:
            raise InvalidArgumentError("s must be non-negative")
        self.digraph = digraph
        self.s = s
        H = digraph.subgroup
        self._prefix: List[Subgroup] = [H]
        self._cache: Dict[Tuple[int, int], Subgroup] = {}
        g_power = digraph.g
        for _ in range(1, s + 1):
            self._prefix.append(intersection(self._prefix[-1], conjugate(H, g_power), bound=bound))
            g_power = g_power * digraph.g

    def get(self, a: int, b: int) -> Subgroup:
        """G_{v_a..v_b} for 0 <= a <= b <= s."""
        if not 0 <= a <= b <= self.s:
            raise InvalidArgumentError(f"stretch ({a}, {b}) outside 0..{self.s}")
        if a == 0:
            return self._prefix[b]
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = conjugate(self._prefix[b - a], self.digraph.g ** a)
        return self._cache[key]

    def orders(self) -> List[int]:
        """|G_{v_0..v_k}| for k = 0..s."""
        return [X.order for X in self._prefix]


@dataclass
class ArcCountResult:
    s: int
    n_arcs: int
    arc_stabilizer_order: int
    transitive: bool
    method: str = "direct"

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "method": self.method,
            "n_arcs": self.n_arcs,
            "arc_stabilizer_order": self.arc_stabilizer_order,
            "transitive": self.transitive,
        }


@dataclass
class CriterionResult:
    s: int
    transitive: bool
    certificates: List[FactorizationCertificate] = field(default_factory=list)
    failing_level: Optional[int] = None
    method: str = "criterion"

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "method": self.method,
            "transitive": self.transitive,
            "failing_level": self.failing_level,
            "certificates": [c.as_dict() for c in self.certificates],
        }


def _arcs_limit(bound: Optional[int]) -> int:
    return bound if bound is not None else active_settings().arcs


def count_s_arcs(digraph: CosetDigraph, s: int) -> int:
    """Number of s-arcs, by propagating walk counts along the out-neighbour array."""
    counts = np.ones(digraph.order, dtype=np.int64)
    out = digraph.out
    k = digraph.valency
    for _ in range(s):
        step = np.zeros(digraph.order, dtype=np.int64)
        np.add.at(step, out.ravel(), np.repeat(counts, k))
        counts = step
    return int(counts.sum())


def s_arcs_direct(
    digraph: CosetDigraph,
    s: int,
    bound: Optional[int] = None,
    chain: Optional[StabilizerChainAlongArc] = None,
) -> ArcCountResult:
    """
    Count s-arcs and test transitivity by orbit-stabilizer on the canonical s-arc.

    Raises:
        ResourceLimitError: the number of s-arcs exceeds the arcs bound
    """
    if s < 1:
        raise InvalidArgumentError("s must be at least 1")
    limit = _arcs_limit(bound)
    expected = digraph.order * digraph.valency**s
    if expected > limit:
        raise ResourceLimitError("arcs", limit, expected)
    n_arcs = count_s_arcs(digraph, s)
    if n_arcs != expected:
        raise InternalInvariantError(f"{n_arcs} {s}-arcs counted, regularity predicts {expected}")
    if chain is None or chain.s < s:
        chain = StabilizerChainAlongArc(digraph, s)
    stab = chain.get(0, s).order
    return ArcCountResult(
        s=s,
        n_arcs=n_arcs,
        arc_stabilizer_order=stab,
        transitive=n_arcs * stab == digraph.group.order,
    )


def s_arc_criterion(
    digraph: CosetDigraph, s: int, chain: Optional[StabilizerChainAlongArc] = None
) -> CriterionResult:
    """
    G is s-arc-transitive iff G_{v_1..v_i} = G_{v_0..v_i} G_{v_1..v_{i+1}} for i = 1..s-1.

    Every level is evaluated and certified; failing_level is the first that fails.
    """
    if s < 1:
        raise InvalidArgumentError("s must be at least 1")
    if chain is None or chain.s < s:
        chain = StabilizerChainAlongArc(digraph, s)
    result = CriterionResult(s=s, transitive=True)
    for i in range(1, s):
        middle = chain.get(1, i)
        cert = is_factorization(middle, chain.get(0, i), chain.get(1, i + 1))
        result.certificates.append(cert)
        if not cert.verdict and result.failing_level is None:
            result.failing_level = i
            result.transitive = False
    return result


def s_arc_orbit_size(
    digraph: CosetDigraph, s: int, bound: Optional[int] = None, acting: Optional[PermGroup] = None
) -> int:
    """Size of the orbit of the canonical s-arc under G (or a subgroup `acting`) on vertex tuples."""
    limit = _arcs_limit(bound)
    if acting is None:
        perms = [p.images for p in digraph.action().generators]
    else:
        perms = [digraph.table.permutation_of(x).images for x in acting.generators]
    start = digraph.canonical_arc(s)
    seen = {start}
    queue = [start]
    for arc in queue:
        for p in perms:
            image = tuple(p[v] for v in arc)
            if image not in seen:
                seen.add(image)
                queue.append(image)
                if len(seen) > limit:
                    raise ResourceLimitError("arcs", limit, len(seen))
    return len(seen)


def arc_transitivity(digraph: CosetDigraph, s_max: int = 5, bound: Optional[int] = None) -> int:
    """Largest s <= s_max such that G is s-arc-transitive (at least 1)."""
    chain = StabilizerChainAlongArc(digraph, s_max)
    best = 1
    for s in range(2, s_max + 1):
        if not s_arcs_direct(digraph, s, bound=bound, chain=chain).transitive:
            break
        best = s
    return best


def valency_power_divides(digraph: CosetDigraph, s: int) -> bool:
    """For s-arc-transitive G, valency^s divides |H|."""
    return digraph.subgroup.order % (digraph.valency**s) == 0


def arc_stabilizer(digraph: CosetDigraph) -> Subgroup:
    """G_{v_0 v_1} = H ∩ H^g."""
    return StabilizerChainAlongArc(digraph, 1).get(0, 1)

