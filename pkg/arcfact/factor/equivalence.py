"""
Randomized agreement checks between the factorization criteria:
the order identity, transitivity of each factor on the cosets of the other,
swapping the factors, and conjugating them independently.
"""

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from arcfact.core.config import active_settings
from arcfact.core.errors import InternalInvariantError
from arcfact.groups import CATALOG_SPECS, build_group
from arcfact.perm import PermGroup, Subgroup, conjugate, stabilizer
from .certificate import is_factorization


@dataclass
class TripleCheck:
    group: str
    order_h: int
    order_k: int
    verdict: bool
    intersection_order: int

    def as_dict(self) -> dict:
        return {
            "group": self.group,
            "order_h": self.order_h,
            "order_k": self.order_k,
            "verdict": self.verdict,
            "intersection_order": self.intersection_order,
        }


def random_subgroup(G: PermGroup, rng: random.Random) -> Subgroup:
    """A point stabilizer, a two-point stabilizer, or a subgroup generated by one or two random elements."""
    kind = rng.randrange(4)
    if kind == 0:
        return stabilizer(G, rng.randrange(G.degree))
    if kind == 1:
        a, b = rng.sample(range(G.degree), 2)
        first = stabilizer(G, a)
        return Subgroup(G, stabilizer(first, b).generators)
    gens = [G.random_element(rng) for _ in range(kind - 1)]
    return Subgroup(G, gens)


def check_triple(label: str, G: PermGroup, H: Subgroup, K: Subgroup, rng: random.Random) -> TripleCheck:
    """
    Evaluate G = HK every way and insist the answers agree.

    Raises:
        InternalInvariantError: two criteria disagree
    """
    cert = is_factorization(G, H, K, cross_check=True)
    swapped = is_factorization(G, K, H)
    if swapped.verdict != cert.verdict:
        raise InternalInvariantError(f"{label}: G = HK is {cert.verdict} but G = KH is {swapped.verdict}")
    x, y = G.random_element(rng), G.random_element(rng)
    moved = is_factorization(G, conjugate(H, x), conjugate(K, y))
    if moved.verdict != cert.verdict:
        raise InternalInvariantError(f"{label}: conjugating the factors changed the verdict")
    return TripleCheck(
        group=label,
        order_h=H.order,
        order_k=K.order,
        verdict=cert.verdict,
        intersection_order=cert.order_intersection,
    )


def criteria_equivalence(
    n_triples: int = 200, seed: Optional[int] = None, specs: Sequence[str] = CATALOG_SPECS
) -> List[TripleCheck]:
    """Run check_triple on n_triples random (G, H, K), cycling G through the catalog."""
    rng = random.Random(active_settings().seed if seed is None else seed)
    groups = [(spec, build_group(spec)) for spec in specs]
    checks = []
    for i in range(n_triples):
        label, G = groups[i % len(groups)]
        H, K = random_subgroup(G, rng), random_subgroup(G, rng)
        checks.append(check_triple(label, G, H, K, rng))
    return checks
