"""
Right cosets, coset actions and subgroup conjugacy.
"""

from typing import Dict, FrozenSet, List, Optional, Tuple

from arcfact.core.config import active_settings
from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, ResourceLimitError
from .group import PermGroup, Subgroup, orbits
from .permutation import Permutation


class CosetTable:
    """
    Right cosets Hx of H in G, numbered so that coset 0 is H itself.

    Cosets are bucketed by the images of the H-orbits under x (well defined on
    Hx); collisions inside a bucket are resolved by membership of x * r^-1 in H.
    """

    def __init__(self, G: PermGroup, H: PermGroup, bound: Optional[int] = None):
        if H.degree != G.degree:
            raise InvalidArgumentError("subgroup and group act on different degrees")
        if not H.is_subgroup_of(G):
            raise InvalidArgumentError("coset table needs H to be a subgroup of G")
        limit = bound if bound is not None else active_settings().points
        index = G.order // H.order
        if index > limit:
            raise ResourceLimitError("points", limit, index)

        self.group = G
        self.subgroup = H
        self.index = index
        self._orbits = [tuple(o) for o in orbits(H)]
        self._buckets: Dict[Tuple[FrozenSet[int], ...], List[int]] = {}
        self.representatives: List[Permutation] = []
        self._inverses: List[Permutation] = []
        self._action: Optional[PermGroup] = None

        self._add(G.identity())
        for i in range(index):
            if i >= len(self.representatives):
                break
            for s in G.generators:
                y = self.representatives[i] * s
                if self._lookup(y) is None:
                    self._add(y)
        if len(self.representatives) != index:
            raise InternalInvariantError(
                f"enumerated {len(self.representatives)} cosets, expected {index}"
            )

    def _key(self, x: Permutation) -> Tuple[FrozenSet[int], ...]:
        img = x.images
        return tuple(frozenset(img[p] for p in orb) for orb in self._orbits)

    def _add(self, x: Permutation) -> int:
        idx = len(self.representatives)
        self.representatives.append(x)
        self._inverses.append(x.inverse())
        self._buckets.setdefault(self._key(x), []).append(idx)
        return idx

    def _lookup(self, x: Permutation) -> Optional[int]:
        for j in self._buckets.get(self._key(x), ()):
            if self.subgroup.contains(x * self._inverses[j]):
                return j
        return None

    def __len__(self) -> int:
        return self.index

    def index_of(self, x: Permutation) -> int:
        """Number of the coset Hx."""
        j = self._lookup(x)
        if j is None:
            raise InvalidArgumentError(f"{x.to_cycle_string()} is not in the group")
        return j

    def act(self, i: int, x: Permutation) -> int:
        """Image of coset i under right multiplication by x."""
        return self.index_of(self.representatives[i] * x)

    def permutation_of(self, x: Permutation) -> Permutation:
        return Permutation([self.act(i, x) for i in range(self.index)])

    def action(self) -> PermGroup:
        """Image of G in Sym([G:H])."""
        if self._action is None:
            self._action = PermGroup(self.index, [self.permutation_of(s) for s in self.group.generators])
        return self._action

    def orbit_of(self, i: int, gens) -> List[int]:
        """Orbit of coset i under right multiplication by the given elements."""
        seen = {i}
        queue = [i]
        for c in queue:
            for x in gens:
                d = self.act(c, x)
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        return sorted(seen)

    def suborbits(self) -> List[List[int]]:
        """Orbits of H on the cosets (one per double coset HxH)."""
        out: List[List[int]] = []
        covered = set()
        for i in range(self.index):
            if i in covered:
                continue
            orb = self.orbit_of(i, self.subgroup.generators)
            covered.update(orb)
            out.append(orb)
        return out


def coset_action(G: PermGroup, H: PermGroup, bound: Optional[int] = None) -> Tuple[PermGroup, CosetTable]:
    """
    Action of G on the right cosets of H.

    Returns:
        (image group on [G:H] points, coset table with coset 0 = H)
    """
    table = CosetTable(G, H, bound=bound)
    return table.action(), table


def are_conjugate_subgroups(
    G: PermGroup, H: PermGroup, K: PermGroup, bound: Optional[int] = None
) -> Optional[Permutation]:
    """
    Find x in G with H^x = K, or None when no such x exists.

    H^x depends only on the coset Hx, so the search runs over a right
    transversal of H, testing the first generator before the rest.
    """
    if H.order != K.order:
        return None
    if not (H.is_subgroup_of(G) and K.is_subgroup_of(G)):
        raise InvalidArgumentError("both subgroups must lie in G")
    if sorted(len(o) for o in orbits(H)) != sorted(len(o) for o in orbits(K)):
        return None
    if H.is_subgroup_of(K):
        return G.identity()

    gens = sorted((h for h in H.generators if not h.is_identity()), key=lambda h: -h.order())
    lead = gens[0]
    table = CosetTable(G, H, bound=bound)
    for x in table.representatives:
        if not K.contains(lead.conjugate_by(x)):
            continue
        if all(K.contains(h.conjugate_by(x)) for h in gens[1:]):
            return x
    return None


def subgroup_core(G: PermGroup, H: Subgroup) -> int:
    """Order of the kernel of the action of G on the cosets of H."""
    action, _ = coset_action(G, H)
    return G.order // action.order
