"""
Deterministic battery of coset digraphs used by the agreement checks.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence

from arcfact.core.errors import ResourceLimitError
from arcfact.core.parsing import parse_permutation
from arcfact.groups import build_group, catalog
from arcfact.perm import (
    CosetTable,
    PermGroup,
    Permutation,
    Subgroup,
    group_from_generators,
    normalizer,
    subgroup_classes,
)
from .coset_digraph import CosetDigraph, build

CYCLE_PRIMES = (3, 5, 7, 11)

# C2 wr C3 on 6 points, and its index-2 subgroup of even block swaps
WREATH_GENERATORS = ("(1,2)", "(1,3,5)(2,4,6)")
EVEN_WREATH_GENERATORS = ("(1,2)(3,4)", "(1,3,5)(2,4,6)")
WREATH_STABILIZER = ("(3,4)", "(5,6)")
EVEN_WREATH_STABILIZER = ("(3,4)(5,6)",)


@dataclass
class BatteryInstance:
    label: str
    digraph: CosetDigraph

    def as_dict(self) -> dict:
        return {"label": self.label, **self.digraph.as_dict()}


def _perms(texts, degree: int) -> List[Permutation]:
    return [parse_permutation(t, degree) for t in texts]


def directed_cycle(p: int) -> CosetDigraph:
    """C_p acting regularly, H = 1, g a generator."""
    G = build_group(f"C:{p}")
    return build(G, Subgroup(G, []), G.generators[0])


def wreath_digraph(even: bool = False) -> CosetDigraph:
    """
    The lexicographic product of a directed 3-cycle with 2 independent
    vertices, under C2 wr C3 (2-arc-regular) or its even subgroup (arc-regular).
    """
    gens = EVEN_WREATH_GENERATORS if even else WREATH_GENERATORS
    stab = EVEN_WREATH_STABILIZER if even else WREATH_STABILIZER
    G = group_from_generators(_perms(gens, 6))
    H = Subgroup(G, _perms(stab, 6))
    return build(G, H, parse_permutation("(1,3,5)(2,4,6)", 6))


def _antisymmetric_suborbit_reps(table: CosetTable, H: PermGroup, N: PermGroup) -> List[Permutation]:
    """
    One coset representative per non-self-paired H-orbit on the nontrivial
    cosets, taken up to conjugation by N = N_G(H).

    Conjugating g by an element of N_G(H) gives an isomorphic coset digraph.
    """
    suborbit_of: Dict[int, int] = {}
    suborbits = table.suborbits()
    for k, orb in enumerate(suborbits):
        for c in orb:
            suborbit_of[c] = k
    seen = set()
    reps = []
    for k, orb in enumerate(suborbits):
        if orb == [0] or k in seen:
            continue
        # N-class of this suborbit
        queue = [k]
        seen.add(k)
        for j in queue:
            x = table.representatives[suborbits[j][0]]
            for a in N.generators:
                image = suborbit_of[table.index_of(x.conjugate_by(a))]
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        g = table.representatives[orb[0]]
        if table.index_of(g.inverse()) not in orb:
            reps.append(g)
    return reps


def group_instances(spec: str, max_index: int = 2000) -> List[BatteryInstance]:
    """
    Coset digraphs of one group: H over subgroup-class representatives
    (largest first, H != G), g over non-self-paired double cosets HgH up to N_G(H).

    Raises:
        ResourceLimitError: the group is too large for subgroup enumeration
    """
    G = build_group(spec)
    out: List[BatteryInstance] = []
    classes = sorted(subgroup_classes(G), key=lambda c: -c.order)
    for cls_index, cls in enumerate(classes):
        H = cls.representative
        index = G.order // H.order
        if H.order == G.order or index > max_index:
            continue
        table = CosetTable(G, H, bound=max_index)
        for g in _antisymmetric_suborbit_reps(table, H, normalizer(G, H)):
            digraph = CosetDigraph(G, H, g, table)
            out.append(BatteryInstance(f"{spec}/H{cls_index}[{H.order}]/{g.to_cycle_string()}", digraph))
    return out


@dataclass
class Battery:
    instances: List[BatteryInstance] = field(default_factory=list)
    # group spec -> reason it is missing or incomplete
    limited: Dict[str, str] = field(default_factory=dict)

    def __iter__(self) -> Iterator[BatteryInstance]:
        return iter(self.instances)

    def __len__(self) -> int:
        return len(self.instances)


def catalog_battery(
    max_index: int = 2000,
    cap: Optional[int] = None,
    groups: Optional[Sequence[str]] = None,
) -> Battery:
    """
    Directed prime cycles, the two wreath digraphs, then the instances of every
    catalog group (or of `groups`).

    A group over the subgroup bound is listed in `limited` instead of being
    dropped silently; so is a group cut short by `cap`.
    """
    battery = Battery([BatteryInstance(f"C:{p}", directed_cycle(p)) for p in CYCLE_PRIMES])
    battery.instances.append(BatteryInstance("wr(C:2,3)", wreath_digraph()))
    battery.instances.append(BatteryInstance("wr(C:2,3)/even", wreath_digraph(even=True)))
    specs = groups if groups is not None else [s.canonical() for s in catalog()]
    for spec in specs:
        try:
            instances = group_instances(spec, max_index=max_index)
        except ResourceLimitError as e:
            battery.limited[spec] = str(e)
            continue
        if cap is not None and len(instances) > cap:
            battery.limited[spec] = f"capped at {cap} of {len(instances)} instances"
            instances = instances[:cap]
        battery.instances.extend(instances)
    return battery
