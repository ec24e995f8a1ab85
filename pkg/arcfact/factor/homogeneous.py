"""
Homogeneous factorization search G = AB with A and B isomorphic (mode "iso")
or conjugate in an ambient overgroup (mode "conj").

Pairs range over conjugacy-class representatives of subgroups: whether
G = AB holds is unchanged by conjugating A and B separately, and the
intersection order of a factorization is |A||B|/|G|.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Dict, List, Optional, Tuple

from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, PreconditionError
from arcfact.numtheory import prime_set
from arcfact.perm import (
    PermGroup,
    Permutation,
    Subgroup,
    SubgroupClass,
    are_conjugate_subgroups,
    subgroup_classes,
)
from .certificate import FactorizationCertificate, as_subgroup, is_factorization
from .isomorphism import isomorphism_verdict

MODES = ("conj", "iso")
MODE_LABELS = {"conj": "conjugate-in-ambient", "iso": "order-and-profile-isomorphic"}


def _gens_text(X: PermGroup) -> List[str]:
    return [g.to_cycle_string() for g in X.generators]


def _gens_key(X: PermGroup) -> Tuple:
    return tuple(g.images for g in sorted(X.generators))


@dataclass
class HomFactPair:
    a: Subgroup
    b: Subgroup
    intersection_order: int
    index: int
    witness: Optional[Permutation] = None
    iso_method: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "a": {"order": self.a.order, "generators": _gens_text(self.a)},
            "b": {"order": self.b.order, "generators": _gens_text(self.b)},
            "intersection_order": self.intersection_order,
            "index": self.index,
            "witness": self.witness.to_cycle_string() if self.witness is not None else None,
            "iso_method": self.iso_method,
        }


@dataclass
class HomFactReport:
    group_id: str
    mode: str
    min_index: int
    group_order: int
    pairs: List[HomFactPair] = field(default_factory=list)
    search_space: Dict[str, int] = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return not self.pairs

    def as_dict(self) -> dict:
        return {
            "group_id": self.group_id,
            "mode": MODE_LABELS[self.mode],
            "min_index": self.min_index,
            "group_order": self.group_order,
            "pairs": [p.as_dict() for p in self.pairs],
            "search_space": dict(self.search_space),
        }


def _candidates(G: PermGroup, classes: List[SubgroupClass], min_index: int) -> List[SubgroupClass]:
    primes = prime_set(G.order)
    return [
        c
        for c in classes
        if G.order // c.order >= min_index and prime_set(c.order) == primes
    ]


def homogeneous_search(
    Gv: PermGroup,
    ambient: Optional[PermGroup] = None,
    mode: str = "iso",
    min_index: int = 2,
    group_id: str = "",
    bound: Optional[int] = None,
) -> HomFactReport:
    """
    All factorizations Gv = AB, up to conjugacy of A and B in Gv, with
    |A| = |B|, |Gv : A| >= min_index and π(A) = π(Gv).

    Args:
        Gv: Group to factor
        ambient: Overgroup supplying conjugating witnesses (mode "conj")
        mode: "conj" or "iso"
        min_index: Smallest admissible index of the factors
        group_id: Label copied into the report
        bound: Subgroup-enumeration bound

    Returns:
        HomFactReport (empty pairs means no such factorization exists)

    Raises:
        ResourceLimitError: the subgroup lattice exceeds the bound
    """
    if mode not in MODES:
        raise InvalidArgumentError(f"mode must be one of {MODES}, got {mode!r}")
    if min_index < 2:
        raise InvalidArgumentError("min_index must be at least 2")
    if mode == "conj":
        if ambient is None:
            raise PreconditionError("conjugacy mode needs an ambient group")
        if not Gv.is_subgroup_of(ambient):
            raise PreconditionError("the ambient group must contain Gv")

    classes = subgroup_classes(Gv, bound=bound)
    candidates = _candidates(Gv, classes, min_index)
    counts = {"classes": len(classes), "candidate_classes": len(candidates), "pairs_examined": 0, "factorizations": 0}
    report = HomFactReport(
        group_id=group_id, mode=mode, min_index=min_index, group_order=Gv.order, search_space=counts
    )

    for i, first in enumerate(candidates):
        for second in candidates[i + 1 :]:
            if first.order != second.order:
                continue
            counts["pairs_examined"] += 1
            meet = len(first.elements & second.elements)
            if meet * Gv.order != first.order * second.order:
                continue
            counts["factorizations"] += 1
            A, B = first.representative, second.representative

            witness, method = None, None
            if mode == "conj":
                witness = are_conjugate_subgroups(ambient, A, B)
                if witness is None:
                    continue
            else:
                verdict = isomorphism_verdict(A, B)
                if not verdict.isomorphic:
                    continue
                method = verdict.method
            report.pairs.append(
                HomFactPair(
                    a=A,
                    b=B,
                    intersection_order=meet,
                    index=Gv.order // A.order,
                    witness=witness,
                    iso_method=method,
                )
            )

    primes = prime_set(Gv.order)
    for pair in report.pairs:
        if prime_set(pair.a.order) != primes or prime_set(pair.b.order) != primes:
            raise InternalInvariantError("emitted pair violates π(A) = π(B) = π(G)")
        if pair.intersection_order * Gv.order != pair.a.order * pair.b.order:
            raise InternalInvariantError("emitted pair is not a factorization")

    report.pairs.sort(key=lambda p: (-p.a.order, _gens_key(p.a), _gens_key(p.b)))
    return report


@dataclass
class Factorization:
    h: Subgroup
    k: Subgroup
    intersection_order: int


def factorizations(G: PermGroup, min_index: int = 2, bound: Optional[int] = None) -> List[Factorization]:
    """Factorizations G = HK with both indices >= min_index, one per pair of distinct subgroup classes."""
    classes = [c for c in subgroup_classes(G, bound=bound) if G.order // c.order >= min_index]
    found: List[Factorization] = []
    for i, first in enumerate(classes):
        for second in classes[i + 1 :]:
            product = first.order * second.order
            if product < G.order or product % G.order:
                continue
            meet = len(first.elements & second.elements)
            if meet * G.order == product:
                found.append(Factorization(first.representative, second.representative, meet))
    return found


@dataclass
class OneFactorVerdict:
    h_transitive: bool
    k_transitive: bool
    certificate: FactorizationCertificate

    def as_dict(self) -> dict:
        return {
            "h_transitive": self.h_transitive,
            "k_transitive": self.k_transitive,
            "certificate": self.certificate.as_dict(),
        }


def _is_natural_symmetric_or_alternating(G: PermGroup) -> bool:
    n = G.degree
    full = factorial(n)
    return G.order == full or (n >= 3 and 2 * G.order == full)


def one_factor_transitive(G: PermGroup, H: PermGroup, K: PermGroup) -> OneFactorVerdict:
    """
    For a factorization of S_n or A_n in its natural action, report which
    factors are transitive on the n points.

    Raises:
        PreconditionError: G is not S_n / A_n or G != HK
        InternalInvariantError: neither factor is transitive
    """
    if not _is_natural_symmetric_or_alternating(G):
        raise PreconditionError("one_factor_transitive needs S_n or A_n in the natural action")
    H, K = as_subgroup(G, H), as_subgroup(G, K)
    certificate = is_factorization(G, H, K)
    if not certificate.verdict:
        raise PreconditionError("H and K do not factor G")
    verdict = OneFactorVerdict(
        h_transitive=H.is_transitive(),
        k_transitive=K.is_transitive(),
        certificate=certificate,
    )
    if not (verdict.h_transitive or verdict.k_transitive):
        raise InternalInvariantError("factorization of S_n/A_n with both factors intransitive")
    return verdict
