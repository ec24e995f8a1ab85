"""
Isomorphism tests for small permutation groups.

Cheap invariants first (order, element-order histogram, derived-subgroup
order), then a generator-mapping backtrack when the order is small enough to
certify.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from arcfact.core.config import active_settings
from arcfact.perm import (
    PermGroup,
    Permutation,
    derived_subgroup,
    enumerate_normal_subgroups,
)


@dataclass(frozen=True)
class GroupProfile:
    order: int
    element_orders: Tuple[Tuple[int, int], ...]
    derived_order: int

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "element_orders": dict(self.element_orders),
            "derived_order": self.derived_order,
        }


@dataclass
class IsomorphismVerdict:
    isomorphic: bool
    method: str  # "profile" or "certified"
    images: Optional[List[Permutation]] = None


def profile(A: PermGroup) -> GroupProfile:
    cached = getattr(A, "_profile", None)
    if cached is None:
        cached = GroupProfile(
            order=A.order,
            element_orders=tuple(A.element_order_histogram().items()),
            derived_order=derived_subgroup(A).order,
        )
        A._profile = cached
    return cached


def _generating_set(A: PermGroup) -> List[Permutation]:
    """A subset of A's generators that still generates A."""
    kept: List[Permutation] = []
    current = PermGroup(A.degree, ())
    for g in sorted(A.generators, key=lambda g: -g.order()):
        if not current.contains(g):
            kept.append(g)
            current = PermGroup(A.degree, kept)
        if current.order == A.order:
            break
    return kept


def _extend(gens: Sequence[Permutation], images: Sequence[Permutation], id_a, id_b) -> Optional[Dict]:
    """Walk the Cayley graph of <gens>; the map g_i -> images_i as a consistent injective map, or None."""
    phi = {id_a: id_b}
    queue = [id_a]
    for x in queue:
        fx = phi[x]
        for a, b in zip(gens, images):
            y, fy = x * a, fx * b
            known = phi.get(y)
            if known is None:
                phi[y] = fy
                queue.append(y)
            elif known != fy:
                return None
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def find_isomorphism(A: PermGroup, B: PermGroup) -> Optional[List[Permutation]]:
    """
    Images in B of a generating set of A defining an isomorphism, or None.

    The generating set is `_generating_set(A)`; candidates for each image
    are the elements of B of matching order.
    """
    if A.order != B.order:
        return None
    gens = _generating_set(A)
    if not gens:
        return []
    by_order: Dict[int, List[Permutation]] = {}
    for b in sorted(B.elements()):
        by_order.setdefault(b.order(), []).append(b)
    id_a, id_b = A.identity(), B.identity()

    def search(chosen: List[Permutation]) -> Optional[List[Permutation]]:
        depth = len(chosen)
        if depth == len(gens):
            return list(chosen)
        for b in by_order.get(gens[depth].order(), []):
            phi = _extend(gens[: depth + 1], chosen + [b], id_a, id_b)
            if phi is None:
                continue
            if depth + 1 == len(gens) and len(phi) != A.order:
                continue
            found = search(chosen + [b])
            if found is not None:
                return found
        return None

    return search([])


def isomorphism_verdict(A: PermGroup, B: PermGroup, certify_bound: Optional[int] = None) -> IsomorphismVerdict:
    """Profile comparison, certified by find_isomorphism when |A| <= certify_bound."""
    limit = certify_bound if certify_bound is not None else active_settings().iso_certify
    if profile(A) != profile(B):
        return IsomorphismVerdict(isomorphic=False, method="profile")
    if A.order > limit:
        return IsomorphismVerdict(isomorphic=True, method="profile")
    images = find_isomorphism(A, B)
    return IsomorphismVerdict(isomorphic=images is not None, method="certified", images=images)


def is_simple(A: PermGroup, bound: Optional[int] = None) -> bool:
    """Nontrivial with no normal subgroups besides 1 and A."""
    if A.order == 1:
        return False
    return len(enumerate_normal_subgroups(A, bound=bound)) == 2
