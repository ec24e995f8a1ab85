"""
Factorization certificates: G = HK checked by the order identity
|H ∩ K| |G| = |H| |K|, optionally cross-checked by transitivity of each
factor on the right cosets of the other.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from arcfact.core.errors import InternalInvariantError, InvalidArgumentError
from arcfact.perm import CosetTable, PermGroup, Subgroup, intersection

ORDER = "order"
H_ON_K = "H-transitive-on-cosets-of-K"
K_ON_H = "K-transitive-on-cosets-of-H"


@dataclass
class FactorizationCertificate:
    order_g: int
    order_h: int
    order_k: int
    order_intersection: int
    verdict: bool
    criteria_checked: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "order_g": self.order_g,
            "order_h": self.order_h,
            "order_k": self.order_k,
            "order_intersection": self.order_intersection,
            "verdict": self.verdict,
            "criteria_checked": list(self.criteria_checked),
        }


def as_subgroup(G: PermGroup, X: PermGroup) -> Subgroup:
    """View X as a Subgroup of G (reusing its chain)."""
    if isinstance(X, Subgroup) and X.ambient is G:
        return X
    if X.degree != G.degree or not X.is_subgroup_of(G):
        raise InvalidArgumentError("factor is not a subgroup of G")
    return Subgroup(G, X.generators, _chain=X.chain)


def transitive_on_cosets(G: PermGroup, X: PermGroup, Y: PermGroup, bound: Optional[int] = None) -> bool:
    """Whether X acts transitively by right multiplication on the right cosets of Y in G."""
    table = CosetTable(G, Y, bound=bound)
    return len(table.orbit_of(0, X.generators)) == table.index


def is_factorization(
    G: PermGroup,
    H: PermGroup,
    K: PermGroup,
    cross_check: bool = False,
    bound: Optional[int] = None,
) -> FactorizationCertificate:
    """
    Decide whether G = HK.

    Args:
        G: Ambient group
        H, K: Subgroups of G
        cross_check: Also test transitivity of H on cosets of K and of K on cosets of H
        bound: Element bound for the intersection

    Returns:
        FactorizationCertificate

    Raises:
        InternalInvariantError: the criteria disagree
    """
    H, K = as_subgroup(G, H), as_subgroup(G, K)
    meet = intersection(H, K, bound=bound)
    verdict = meet.order * G.order == H.order * K.order
    checked = [ORDER]

    if cross_check:
        results = {
            H_ON_K: transitive_on_cosets(G, H, K),
            K_ON_H: transitive_on_cosets(G, K, H),
        }
        for name, value in results.items():
            checked.append(name)
            if value != verdict:
                raise InternalInvariantError(
                    f"factorization criteria disagree: order says {verdict}, {name} says {value}"
                )

    return FactorizationCertificate(
        order_g=G.order,
        order_h=H.order,
        order_k=K.order,
        order_intersection=meet.order,
        verdict=verdict,
        criteria_checked=checked,
    )
