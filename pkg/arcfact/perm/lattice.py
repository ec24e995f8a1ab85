"""
Subgroup lattices of small groups.

Elements are numbered in lexicographic order of their image tuples (so the
numbering does not depend on how the chain was built), and products and
conjugates are read from numpy tables.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from arcfact.core.config import active_settings
from arcfact.core.errors import ResourceLimitError
from .group import PermGroup, Subgroup, normal_closure
from .permutation import Permutation


class CayleyTable:
    """Multiplication, inversion and conjugation tables of a small group."""

    def __init__(self, G: PermGroup):
        self.group = G
        self.elements: List[Permutation] = sorted(G.elements())
        n = len(self.elements)
        self.size = n
        arr = np.array([e.images for e in self.elements], dtype=np.int32)
        lookup = {arr[i].tobytes(): i for i in range(n)}
        self.index: Dict[Permutation, int] = {e: i for i, e in enumerate(self.elements)}

        # mult[i, j] = index of elements[i] * elements[j]
        self.mult = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            products = np.ascontiguousarray(arr[:, arr[i]])
            self.mult[i] = [lookup[row.tobytes()] for row in products]
        identity = self.index[G.identity()]
        self.identity = identity
        self.inverse = np.argmax(self.mult == identity, axis=1).astype(np.int32)
        self._conj: Optional[np.ndarray] = None

    @property
    def conj(self) -> np.ndarray:
        """conj[x, y] = index of x^-1 y x."""
        if self._conj is None:
            n = self.size
            conj = np.empty((n, n), dtype=np.int32)
            for x in range(n):
                conj[x] = self.mult[self.mult[self.inverse[x], :], x]
            self._conj = conj
        return self._conj

    def closure(self, gens: Sequence[int]) -> FrozenSet[int]:
        """Element set of the subgroup generated by the given indices."""
        members = np.zeros(self.size, dtype=bool)
        members[self.identity] = True
        gens = np.asarray(sorted(set(gens)), dtype=np.int32)
        frontier = np.array([self.identity], dtype=np.int32)
        while frontier.size and gens.size:
            products = self.mult[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(products[~members[products]])
            members[fresh] = True
            frontier = fresh
        return frozenset(np.flatnonzero(members).tolist())


@dataclass
class SubgroupClass:
    representative: Subgroup
    size: int  # number of conjugates
    elements: FrozenSet[int]  # indices into the Cayley table

    @property
    def order(self) -> int:
        return self.representative.order


def _sort_key(gens: Sequence[Permutation]) -> Tuple:
    return tuple(g.images for g in sorted(gens))


def cayley_table(H: PermGroup) -> CayleyTable:
    table = getattr(H, "_cayley_table", None)
    if table is None:
        table = CayleyTable(H)
        H._cayley_table = table
    return table


def subgroup_classes(H: PermGroup, bound: Optional[int] = None) -> List[SubgroupClass]:
    """
    Conjugacy classes of subgroups of H.

    Starts from the trivial and cyclic subgroups, then joins every class
    representative with every cyclic subgroup until no new class appears.
    Every subgroup V is the join of a maximal subgroup of V with one more
    cyclic subgroup, so the closure is complete.
    """
    limit = bound if bound is not None else active_settings().subgroups
    if H.order > limit:
        raise ResourceLimitError("subgroups", limit, H.order)
    cached = getattr(H, "_subgroup_classes", None)
    if cached is not None:
        return cached

    table = cayley_table(H)
    conj = table.conj
    n = table.size

    cyclic: Dict[FrozenSet[int], int] = {}
    for x in range(n):
        powers = [x]
        y = x
        while y != table.identity:
            y = int(table.mult[y, x])
            powers.append(y)
        key = frozenset(powers)
        if key not in cyclic:
            cyclic[key] = x
    cyclic_list = sorted(cyclic.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    seen: Dict[FrozenSet[int], int] = {}
    found: List[Tuple[FrozenSet[int], List[int], int]] = []  # (elements, generator indices, class size)

    def register(elements: FrozenSet[int], gens: List[int]) -> None:
        if elements in seen:
            return
        idx = np.fromiter(sorted(elements), dtype=np.int32)
        images = np.sort(conj[:, idx], axis=1)
        best_x = min(range(n), key=lambda x: images[x].tobytes())
        conjugates = {frozenset(row.tolist()) for row in images}
        class_id = len(found)
        for c in conjugates:
            seen[c] = class_id
        rep_gens = sorted({int(conj[best_x, g]) for g in gens})
        found.append((frozenset(images[best_x].tolist()), rep_gens, len(conjugates)))

    register(frozenset([table.identity]), [])
    for elements, gen in cyclic_list:
        register(elements, [gen])

    i = 0
    while i < len(found):
        elements, gens, _ = found[i]
        for z_elements, z in cyclic_list:
            if z in elements:
                continue
            register(table.closure(gens + [z]), gens + [z])
        i += 1

    classes = []
    for elements, gens, size in found:
        rep = Subgroup(H, [table.elements[g] for g in gens])
        classes.append(SubgroupClass(representative=rep, size=size, elements=elements))
    classes.sort(key=lambda c: (c.order, _sort_key(c.representative.generators)))
    H._subgroup_classes = classes
    return classes


def enumerate_subgroups(H: PermGroup, bound: Optional[int] = None) -> List[Subgroup]:
    """One representative per conjugacy class of subgroups, sorted by order then generators."""
    return [c.representative for c in subgroup_classes(H, bound=bound)]


def subgroups_of_order(H: PermGroup, order: int, bound: Optional[int] = None) -> List[Subgroup]:
    return [c.representative for c in subgroup_classes(H, bound=bound) if c.order == order]


def conjugacy_class_representatives(H: PermGroup) -> List[Permutation]:
    """One element per conjugacy class of H, in order of first appearance."""
    covered = set()
    reps = []
    for x in sorted(H.elements()):
        if x in covered:
            continue
        reps.append(x)
        queue = [x]
        covered.add(x)
        for y in queue:
            for s in H.generators:
                z = y.conjugate_by(s)
                if z not in covered:
                    covered.add(z)
                    queue.append(z)
    return reps


def enumerate_normal_subgroups(H: PermGroup, bound: Optional[int] = None) -> List[Subgroup]:
    """
    All normal subgroups of H: normal closures of single elements, closed under joins.
    """
    limit = bound if bound is not None else active_settings().normal_subgroups
    if H.order > limit:
        raise ResourceLimitError("normal_subgroups", limit, H.order)

    normals: List[Subgroup] = [Subgroup(H, [])]

    def add(N: Subgroup) -> bool:
        if any(M.same_as(N) for M in normals):
            return False
        normals.append(N)
        return True

    for x in conjugacy_class_representatives(H):
        if not x.is_identity():
            add(normal_closure(H, [x]))

    changed = True
    while changed:
        changed = False
        for i in range(len(normals)):
            for j in range(i + 1, len(normals)):
                A, B = normals[i], normals[j]
                if A.is_subgroup_of(B) or B.is_subgroup_of(A):
                    continue
                if add(Subgroup(H, list(A.generators) + list(B.generators))):
                    changed = True

    normals.sort(key=lambda N: (N.order, _sort_key(N.generators)))
    return normals
