"""
Permutation groups and subgroups built on stabilizer chains, plus the
orbit / block / stabilizer / conjugation / intersection operations.
"""

import random
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence

from arcfact.core.config import active_settings
from arcfact.core.errors import (
    InternalInvariantError,
    InvalidArgumentError,
    PreconditionError,
    ResourceLimitError,
)
from .chain import StabilizerChain
from .permutation import Permutation


class PermGroup:
    """A permutation group on {0..degree-1}, immutable once its chain is verified."""

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation] = (),
        base_prefix: Sequence[int] = (),
        _chain: Optional[StabilizerChain] = None,
    ):
        gens = tuple(generators)
        if degree < 1:
            raise InvalidArgumentError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise InvalidArgumentError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = gens
        if _chain is None:
            _chain = StabilizerChain(degree, gens, base_prefix, seed=active_settings().seed)
            for g in gens:
                if not _chain.contains(g):
                    raise InternalInvariantError(f"generator {g} fails membership against its own chain")
        self.chain = _chain

    @property
    def order(self) -> int:
        return self.chain.order

    @property
    def base(self) -> List[int]:
        return self.chain.base

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def _check_degree(self, x: Permutation) -> None:
        if x.degree != self.degree:
            raise InvalidArgumentError(f"degree mismatch: element on {x.degree} points, group on {self.degree}")

    def contains(self, x: Permutation) -> bool:
        self._check_degree(x)
        return self.chain.contains(x)

    __contains__ = contains

    def elements(self) -> Iterator[Permutation]:
        return self.chain.elements()

    def random_element(self, rng: random.Random) -> Permutation:
        return self.chain.random_element(rng)

    def orbit(self, point: int) -> FrozenSet[int]:
        return orbit(self, point)

    def orbits(self) -> List[List[int]]:
        return orbits(self)

    def is_transitive(self) -> bool:
        return len(orbit(self, 0)) == self.degree

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(self.contains(h.conjugate_by(s)) for h in self.generators for s in other.generators)

    def same_as(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def element_order_histogram(self, bound: Optional[int] = None) -> Dict[int, int]:
        _check_elements_bound(self.order, bound)
        return dict(sorted(Counter(x.order() for x in self.elements()).items()))

    def transitivity_degree(self) -> int:
        """Largest k such that the group is k-transitive on its domain."""
        k = 0
        current: PermGroup = self
        remaining = list(range(self.degree))
        while remaining and set(orbit(current, remaining[0])) == set(remaining):
            k += 1
            point = remaining.pop(0)
            current = stabilizer(current, point)
        return k

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


class Subgroup(PermGroup):
    """A PermGroup tagged with the ambient group containing it."""

    def __init__(
        self,
        ambient: PermGroup,
        generators: Iterable[Permutation] = (),
        _chain: Optional[StabilizerChain] = None,
    ):
        gens = tuple(generators)
        super().__init__(ambient.degree, gens, _chain=_chain)
        for g in gens:
            if not ambient.contains(g):
                raise InvalidArgumentError(f"generator {g.to_cycle_string()} is not in the ambient group")
        if ambient.order % self.order:
            raise InternalInvariantError(f"subgroup order {self.order} does not divide {ambient.order}")
        self.ambient = ambient

    @property
    def group(self) -> PermGroup:
        return self

    @property
    def index(self) -> int:
        return self.ambient.order // self.order

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, index={self.index}, degree={self.degree})"


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    blocks: Optional[List[List[int]]] = None

    def as_dict(self) -> dict:
        return {
            "primitive": self.primitive,
            "blocks": self.blocks,
        }


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def classes(self) -> List[List[int]]:
        groups: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


def _check_elements_bound(order: int, bound: Optional[int]) -> None:
    limit = bound if bound is not None else active_settings().elements
    if order > limit:
        raise ResourceLimitError("elements", limit, order)


def group_from_generators(gens: Sequence[Permutation], degree: Optional[int] = None) -> PermGroup:
    """
    Build a group with a verified stabilizer chain.

    Args:
        gens: Generators, all of one degree
        degree: Required when gens is empty (the trivial group of that degree)

    Returns:
        PermGroup
    """
    gens = list(gens)
    if not gens:
        if degree is None:
            raise InvalidArgumentError("an empty generator list needs an explicit degree")
        return PermGroup(degree, ())
    degrees = {g.degree for g in gens}
    if len(degrees) != 1 or (degree is not None and degrees != {degree}):
        raise InvalidArgumentError(f"generators have mismatched degrees {sorted(degrees)}")
    return PermGroup(degrees.pop(), gens)


def contains(G: PermGroup, x: Permutation) -> bool:
    return G.contains(x)


def orbit(G: PermGroup, point: int) -> FrozenSet[int]:
    """Orbit of `point` under the generators."""
    if not 0 <= point < G.degree:
        raise InvalidArgumentError(f"point {point} outside 0..{G.degree - 1}")
    seen = {point}
    queue = [point]
    for p in queue:
        for s in G.generators:
            q = s.images[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


def orbits(G: PermGroup) -> List[List[int]]:
    """Orbit partition of {0..n-1}, each orbit sorted, ordered by least point."""
    uf = _UnionFind(G.degree)
    for s in G.generators:
        for p, q in enumerate(s.images):
            uf.union(p, q)
    return uf.classes()


def block_system(G: PermGroup, a: int, b: int) -> List[List[int]]:
    """Finest G-invariant partition in which a and b share a block."""
    uf = _UnionFind(G.degree)
    uf.union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for s in G.generators:
            xs, ys = s.images[x], s.images[y]
            if uf.union(xs, ys):
                queue.append((xs, ys))
    return uf.classes()


def minimal_block(G: PermGroup, a: int, b: int) -> List[int]:
    """Smallest block containing a and b."""
    return next(block for block in block_system(G, a, b) if a in block)


def is_primitive(G: PermGroup) -> PrimitivityResult:
    """
    Primitivity test for a transitive group.

    Returns:
        PrimitivityResult; when imprimitive, the block system of a minimal
        nontrivial block containing 0
    """
    if not G.is_transitive():
        raise PreconditionError("is_primitive needs a transitive group")
    n = G.degree
    if n <= 2:
        return PrimitivityResult(primitive=True)

    point_stab = stabilizer(G, 0)
    best: Optional[List[List[int]]] = None
    for rep in (o[0] for o in orbits(point_stab)):
        if rep == 0:
            continue
        system = block_system(G, 0, rep)
        if len(system) == 1:
            continue
        if best is None or len(system[0]) < len(best[0]):
            best = system
    if best is None:
        return PrimitivityResult(primitive=True)
    return PrimitivityResult(primitive=False, blocks=best)


def stabilizer(G: PermGroup, point: int) -> Subgroup:
    """Point stabilizer G_point, read off a chain whose first base point is `point`."""
    if not 0 <= point < G.degree:
        raise InvalidArgumentError(f"point {point} outside 0..{G.degree - 1}")
    chain = G.chain
    if not chain.levels or chain.levels[0].base != point:
        if not chain.levels or all(s.images[point] == point for s in G.generators):
            return Subgroup(G, G.generators, _chain=chain)
        chain = StabilizerChain(G.degree, G.generators, base_prefix=[point], seed=active_settings().seed)
    deeper = chain.levels[1:]
    gens = deeper[0].gens if deeper else []
    return Subgroup(G, gens, _chain=StabilizerChain.from_levels(G.degree, deeper))


def conjugate(H: Subgroup, x: Permutation) -> Subgroup:
    """H^x = x^-1 H x inside the same ambient."""
    if not H.ambient.contains(x):
        raise InvalidArgumentError(f"{x.to_cycle_string()} is not in the ambient group")
    return Subgroup(H.ambient, [h.conjugate_by(x) for h in H.generators])


def intersection(H: Subgroup, K: Subgroup, bound: Optional[int] = None) -> Subgroup:
    """
    H ∩ K by enumerating the smaller group and sifting against the larger.

    Raises:
        PreconditionError: H and K act on different points or lie in different ambient groups
        ResourceLimitError: the smaller order exceeds the element bound
    """
    if H.degree != K.degree:
        raise PreconditionError(f"intersection of subgroups on {H.degree} and {K.degree} points")
    if H.ambient is not K.ambient and not H.ambient.same_as(K.ambient):
        raise PreconditionError("intersection needs subgroups of the same ambient group")
    small, large = (H, K) if H.order <= K.order else (K, H)
    ambient = H.ambient
    if small.is_subgroup_of(large):
        return Subgroup(ambient, small.generators, _chain=small.chain)
    _check_elements_bound(small.order, bound)

    gens: List[Permutation] = []
    current = PermGroup(H.degree, ())
    for x in small.elements():
        if large.contains(x) and not current.contains(x):
            gens.append(x)
            current = PermGroup(H.degree, gens)
    return Subgroup(ambient, gens, _chain=current.chain)


def normal_closure(G: PermGroup, gens: Sequence[Permutation]) -> Subgroup:
    """Smallest normal subgroup of G containing gens."""
    closure_gens = [x for x in gens if not x.is_identity()]
    N = PermGroup(G.degree, closure_gens)
    changed = True
    while changed:
        changed = False
        for x in list(closure_gens):
            for s in G.generators:
                y = x.conjugate_by(s)
                if not N.contains(y):
                    closure_gens.append(y)
                    N = PermGroup(G.degree, closure_gens)
                    changed = True
    return Subgroup(G, closure_gens, _chain=N.chain)


def derived_subgroup(G: PermGroup) -> Subgroup:
    commutators = [
        a.inverse() * b.inverse() * a * b
        for i, a in enumerate(G.generators)
        for b in G.generators[i + 1:]
    ]
    return normal_closure(G, commutators)


def normalizer(G: PermGroup, H: PermGroup, bound: Optional[int] = None) -> Subgroup:
    """N_G(H) by enumerating G (small groups only)."""
    _check_elements_bound(G.order, bound)
    gens: List[Permutation] = []
    current = PermGroup(G.degree, ())
    for x in G.elements():
        if current.contains(x):
            continue
        if all(H.contains(h.conjugate_by(x)) for h in H.generators):
            gens.append(x)
            current = PermGroup(G.degree, gens)
    return Subgroup(G, gens, _chain=current.chain)
