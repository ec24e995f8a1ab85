"""
Constructors for named permutation groups.

Projective-line groups act on F_q ∪ {∞}; the field element with code a is
point a and ∞ is point q.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from arcfact.core.config import active_settings
from arcfact.core.errors import InternalInvariantError, InvalidArgumentError, ResourceLimitError
from arcfact.core.parsing import (
    FAMILIES,
    GroupSpec,
    NamedGroupSpec,
    RawGenerators,
    parse_group_spec,
    parse_permutation,
)
from arcfact.numtheory import prime_power
from arcfact.perm import (
    PermGroup,
    Permutation,
    Subgroup,
    coset_action,
    group_from_generators,
    normalizer,
)
from .fields import FiniteField, verify_field

M11_GENERATORS = ("(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)")
M12_GENERATORS = M11_GENERATORS + ("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",)

# specs the randomized batteries draw from
CATALOG_SPECS = ("S:4", "S:5", "S:6", "S:7", "A:5", "A:6", "A:7", "PSL2:7", "PSL2:9", "PGL2:5")

_CACHE: Dict[Tuple[str, int], PermGroup] = {}


def _projective_map(F: FiniteField, fn: Callable[[int], int]) -> Permutation:
    return Permutation([fn(x) for x in range(F.q + 1)])


def translation(F: FiniteField) -> Permutation:
    """x -> x + 1."""
    inf = F.q
    return _projective_map(F, lambda x: inf if x == inf else int(F.add[x, 1]))


def scaling(F: FiniteField, c: int) -> Permutation:
    """x -> c x."""
    inf = F.q
    return _projective_map(F, lambda x: inf if x == inf else int(F.mul[c, x]))


def negative_inversion(F: FiniteField) -> Permutation:
    """x -> -1/x."""
    inf = F.q

    def image(x: int) -> int:
        if x == inf:
            return 0
        if x == 0:
            return inf
        return int(F.neg[F.inv[x]])

    return _projective_map(F, image)


def frobenius(F: FiniteField) -> Permutation:
    """x -> x^p."""
    inf = F.q
    return _projective_map(F, lambda x: inf if x == inf else F.frobenius(x))


def _nontrivial(gens: Sequence[Permutation]) -> List[Permutation]:
    return [g for g in gens if not g.is_identity()]


def _projective_generators(family: str, q: int) -> List[Permutation]:
    F = verify_field(q)
    lam = F.primitive_element
    gens = [translation(F), scaling(F, F.power(lam, 2)), negative_inversion(F)]
    if family in ("PGL2", "PGammaL2"):
        gens.append(scaling(F, lam))
    if family in ("PSigmaL2", "PGammaL2"):
        gens.append(frobenius(F))
    return _nontrivial(gens)


def _check_points(degree: int) -> None:
    limit = active_settings().points
    if degree > limit:
        raise ResourceLimitError("points", limit, degree)


def _int_param(spec: NamedGroupSpec) -> int:
    if FAMILIES.get(spec.family) == 1:
        if len(spec.params) != 1 or not isinstance(spec.params[0], int):
            raise InvalidArgumentError(f"{spec.family} takes one integer parameter")
        return spec.params[0]
    return 0


def _build_family(spec: NamedGroupSpec) -> PermGroup:
    family = spec.family
    n = _int_param(spec)

    if family in ("S", "A", "C"):
        if n < 1:
            raise InvalidArgumentError(f"{family}:{n} needs n >= 1")
        _check_points(n)
        cycle = Permutation([(i + 1) % n for i in range(n)])
        if family == "C":
            return group_from_generators([cycle], degree=n)
        if family == "S":
            gens = [cycle] + ([Permutation.from_cycles(n, [(0, 1)])] if n > 2 else [])
            return group_from_generators(_nontrivial(gens), degree=n)
        # A_n is generated by the 3-cycles (0 1 k)
        gens = [Permutation.from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
        return group_from_generators(gens, degree=n)

    if family == "D":
        if n < 6 or n % 2:
            raise InvalidArgumentError(f"D:{n} needs an even order >= 6")
        m = n // 2
        _check_points(m)
        rotation = Permutation([(i + 1) % m for i in range(m)])
        reflection = Permutation([(-i) % m for i in range(m)])
        return group_from_generators([rotation, reflection], degree=m)

    if family in ("PSL2", "PGL2", "PSigmaL2", "PGammaL2"):
        prime_power(n)
        _check_points(n + 1)
        return group_from_generators(_projective_generators(family, n), degree=n + 1)

    if family == "M11":
        return group_from_generators([parse_permutation(g, 11) for g in M11_GENERATORS])
    if family == "M12":
        return group_from_generators([parse_permutation(g, 12) for g in M12_GENERATORS])

    raise InvalidArgumentError(f"unknown group family {family!r}")


def _build_wreath(spec: NamedGroupSpec) -> PermGroup:
    inner, k = spec.params
    if not isinstance(k, int) or k < 1:
        raise InvalidArgumentError("wreath product needs k >= 1 copies")
    R = build_group(inner)
    d = R.degree
    _check_points(d * k)
    gens = [Permutation(list(g.images) + list(range(d, d * k))) for g in R.generators]
    if k >= 2:
        swap = [((b ^ 1) if b < 2 else b) * d + i for b in range(k) for i in range(d)]
        shift = [((b + 1) % k) * d + i for b in range(k) for i in range(d)]
        gens += [Permutation(swap), Permutation(shift)]
    return group_from_generators(_nontrivial(gens), degree=d * k)


def _build_direct(spec: NamedGroupSpec) -> PermGroup:
    factors = [build_group(p) for p in spec.params]
    total = sum(F.degree for F in factors)
    _check_points(total)
    gens: List[Permutation] = []
    offset = 0
    for F in factors:
        for g in F.generators:
            images = list(range(total))
            images[offset : offset + F.degree] = [offset + x for x in g.images]
            gens.append(Permutation(images))
        offset += F.degree
    return group_from_generators(gens, degree=total)


def _build_coset(spec: NamedGroupSpec) -> PermGroup:
    G = build_group(spec.params[0])
    sub = spec.params[1]
    if isinstance(sub, RawGenerators):
        if sub.degree != G.degree:
            raise InvalidArgumentError(f"subgroup generators on {sub.degree} points, group on {G.degree}")
        H = Subgroup(G, sub.generators)
    else:
        K = build_group(sub)
        if K.degree != G.degree or not K.is_subgroup_of(G):
            raise InvalidArgumentError(f"{sub.canonical()} is not a subgroup of {spec.params[0].canonical()}")
        H = Subgroup(G, K.generators, _chain=K.chain)
    action, _ = coset_action(G, H)
    return action


def build_named(spec: NamedGroupSpec) -> PermGroup:
    """
    Build a named group.

    Args:
        spec: Parsed NamedGroupSpec

    Returns:
        PermGroup in its standard action
    """
    key = (spec.canonical(), active_settings().seed)
    if key in _CACHE:
        return _CACHE[key]
    if spec.family == "WREATH":
        G = _build_wreath(spec)
    elif spec.family == "DIRECT":
        G = _build_direct(spec)
    elif spec.family == "COSET":
        G = _build_coset(spec)
    else:
        G = _build_family(spec)
    _CACHE[key] = G
    return G


def build_group(spec: Union[str, GroupSpec]) -> PermGroup:
    """Build a group from spec text, a NamedGroupSpec or raw generators."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, RawGenerators):
        _check_points(spec.degree)
        return group_from_generators(spec.generators, degree=spec.degree)
    return build_named(spec)


def build_subgroup(G: PermGroup, spec: Union[str, GroupSpec]) -> Subgroup:
    """A subgroup of G given by generators on G's points, or by a named group of the same degree."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec, degree=G.degree)
    if isinstance(spec, RawGenerators):
        if spec.degree != G.degree:
            raise InvalidArgumentError(f"subgroup generators on {spec.degree} points, group on {G.degree}")
        return Subgroup(G, spec.generators)
    K = build_named(spec)
    if K.degree != G.degree:
        raise InvalidArgumentError(f"{spec.canonical()} has degree {K.degree}, group has degree {G.degree}")
    return Subgroup(G, K.generators, _chain=K.chain)


def catalog() -> List[NamedGroupSpec]:
    return [parse_group_spec(s) for s in CATALOG_SPECS]


def dihedral_subgroup(G: PermGroup, n: int, bound: Optional[int] = None) -> Subgroup:
    """
    D_{2n} inside G: the first element z of order n (in sorted order) that
    some involution t inverts, together with the first such t.
    """
    if n < 2:
        raise InvalidArgumentError("dihedral subgroup needs n >= 2")
    limit = bound if bound is not None else active_settings().elements
    if G.order > limit:
        raise ResourceLimitError("elements", limit, G.order)
    elements = sorted(G.elements())
    involutions = [t for t in elements if t.order() == 2]
    for z in elements:
        if z.order() != n:
            continue
        z_inv = z.inverse()
        for t in involutions:
            if t != z and z.conjugate_by(t) == z_inv:
                return Subgroup(G, [z, t])
    raise InvalidArgumentError(f"no dihedral subgroup of order {2 * n} in a group of order {G.order}")


def split_torus_normalizer(q: int, family: str = "PSL2") -> Subgroup:
    """
    <x -> λ^2 x, x -> -1/x> in PSL2(q), or <x -> λ x, x -> -1/x> in PGL2(q).

    For odd q these are dihedral of order q - 1 and 2(q - 1).
    """
    if family not in ("PSL2", "PGL2"):
        raise InvalidArgumentError("split torus normalizer is defined for PSL2 and PGL2")
    G = build_named(NamedGroupSpec(family, (q,)))
    F = verify_field(q)
    lam = F.primitive_element
    c = F.power(lam, 2) if family == "PSL2" else lam
    return Subgroup(G, _nontrivial([scaling(F, c), negative_inversion(F)]))


def frobenius_normalizer(q: int, n: int) -> Subgroup:
    """Normalizer in PGammaL2(q) of the D_{2n} found in PSL2(q)."""
    full = build_named(NamedGroupSpec("PGammaL2", (q,)))
    D = dihedral_subgroup(build_named(NamedGroupSpec("PSL2", (q,))), n)
    return normalizer(full, Subgroup(full, D.generators, _chain=D.chain))


def borel_subgroup(q: int) -> Subgroup:
    """<x -> x + 1, x -> λ^2 x> in PSL2(q), the stabilizer of ∞."""
    G = build_named(NamedGroupSpec("PSL2", (q,)))
    F = verify_field(q)
    return Subgroup(G, _nontrivial([translation(F), scaling(F, F.power(F.primitive_element, 2))]))


def m11_point_stabilizer(M12: PermGroup) -> Subgroup:
    """The intransitive M11 fixing the last point of M12."""
    return Subgroup(M12, [parse_permutation(g, 12) for g in M11_GENERATORS])


def transitive_m11(M12: PermGroup) -> Subgroup:
    """
    The transitive M11 of M12 that contains c = (1,2,...,11).

    c lies in exactly one M11 of each class. The transitive one is generated
    by c and any of its elements of order 4 (PSL2(11), the other maximal
    subgroup over <c>, has none), so a pass over M12 in element order finds it.
    """
    if M12.order != 95040 or M12.degree != 12:
        raise InvalidArgumentError("transitive_m11 needs M12 on 12 points")
    c = parse_permutation(M11_GENERATORS[0], 12)
    if not M12.contains(c):
        raise InvalidArgumentError("transitive_m11 needs an M12 containing (1,2,...,11)")
    for y in M12.elements():
        # order-4 elements fixing 12 lie in the intransitive M11
        if y(11) == 11 or y.order() != 4:
            continue
        candidate = PermGroup(12, [c, y])
        if candidate.order == 7920 and candidate.is_transitive():
            return Subgroup(M12, [c, y], _chain=candidate.chain)
    raise InternalInvariantError("M12 has no transitive M11 through (1,2,...,11)")
