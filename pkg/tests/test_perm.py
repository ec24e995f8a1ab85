import random

import pytest

from arcfact.core.config import settings_override
from arcfact.core.errors import (
    InvalidArgumentError,
    InvalidPermutationError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from arcfact.core.parsing import parse_group_spec, parse_permutation
from arcfact.groups import build_group
from arcfact.perm import (
    CosetTable,
    Permutation,
    Subgroup,
    are_conjugate_subgroups,
    coset_action,
    derived_subgroup,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    group_from_generators,
    intersection,
    is_primitive,
    minimal_block,
    normalizer,
    stabilizer,
    subgroup_classes,
    subgroup_core,
    subgroups_of_order,
)


def perm(text, degree):
    return parse_permutation(text, degree)


def test_right_action_composition():
    p = perm("(1,2)", 3)
    q = perm("(2,3)", 3)
    # x^(pq) = (x^p)^q
    assert (p * q)(0) == 2
    assert (p * q).to_cycle_string() == "(1,3,2)"


def test_cycle_type_order_parity():
    x = perm("(1,2)(3,4,5)", 5)
    assert x.cycle_type() == [2, 3]
    assert x.order() == 6
    assert not x.is_even()
    assert (x**6).is_identity()
    assert x * x.inverse() == Permutation.identity(5)


def test_conjugation():
    x = perm("(1,2,3)", 4)
    y = perm("(3,4)", 4)
    assert x.conjugate_by(y) == perm("(1,2,4)", 4)


def test_invalid_permutation():
    with pytest.raises(InvalidPermutationError):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutationError):
        perm("(1,5)", 4)


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse_permutation("(1,2")
    assert info.value.offset == 4


def test_group_spec_round_trip():
    for text in ("S:6", "PSL2:9", "wr(S:3,2)", "direct(C:2,C:3)"):
        spec = parse_group_spec(text)
        assert parse_group_spec(spec.canonical()).canonical() == spec.canonical()
    raw = parse_group_spec("(1,2);(1,2,3,4)")
    assert raw.degree == 4
    assert parse_group_spec(raw.canonical()).canonical() == raw.canonical()


def test_orders_of_named_groups():
    assert build_group("S:6").order == 720
    assert build_group("A:7").order == 2520
    assert build_group("C:11").order == 11
    assert build_group("D:10").order == 10


def test_chain_order_is_seed_independent():
    gens = [perm("(1,2,3,4,5,6,7)", 7), perm("(1,2)", 7)]
    orders = set()
    for seed in (0, 1, 7, 12345):
        with settings_override(seed=seed):
            orders.add(group_from_generators(gens).order)
    assert orders == {5040}


def test_membership():
    A5 = build_group("A:5")
    assert A5.contains(perm("(1,2,3)", 5))
    assert not A5.contains(perm("(1,2)", 5))
    rng = random.Random(3)
    for _ in range(20):
        assert A5.contains(A5.random_element(rng))


def test_element_enumeration_is_complete():
    S4 = build_group("S:4")
    elements = list(S4.elements())
    assert len(elements) == 24
    assert len(set(elements)) == 24


def test_orbits_and_stabilizer():
    G = group_from_generators([perm("(1,2)", 5), perm("(3,4,5)", 5)])
    assert G.orbits() == [[0, 1], [2, 3, 4]]
    assert stabilizer(G, 0).order == 3
    S5 = build_group("S:5")
    assert stabilizer(S5, 2).order == 24
    assert S5.transitivity_degree() == 5
    assert build_group("A:5").transitivity_degree() == 3


def test_primitivity():
    assert is_primitive(build_group("S:5")).primitive
    result = is_primitive(build_group("wr(S:2,3)"))
    assert not result.primitive
    assert all(len(b) == 2 for b in result.blocks)
    D8 = build_group("D:8")
    assert minimal_block(D8, 0, 2) == [0, 2]


def test_intersection_and_normalizer():
    S4 = build_group("S:4")
    H = Subgroup(S4, [perm("(1,2,3,4)", 4)])
    K = Subgroup(S4, [perm("(1,3)", 4), perm("(2,4)", 4)])
    assert intersection(H, K).order == 2
    assert normalizer(S4, H).order == 8


def test_intersection_respects_bound():
    S6 = build_group("S:6")
    H = stabilizer(S6, 0)
    K = stabilizer(S6, 1)
    with pytest.raises(ResourceLimitError):
        intersection(H, K, bound=10)


def test_derived_subgroup():
    assert derived_subgroup(build_group("S:5")).order == 60
    assert derived_subgroup(build_group("A:4")).order == 4


def test_coset_table():
    S4 = build_group("S:4")
    H = stabilizer(S4, 0)
    table = CosetTable(S4, H)
    assert table.index == 4
    assert table.index_of(S4.identity()) == 0
    action, _ = coset_action(S4, H)
    assert action.order == 24
    assert len(table.suborbits()) == 2
    assert subgroup_core(S4, H) == 1


def test_coset_table_points_bound():
    S7 = build_group("S:7")
    with settings_override(points=100):
        with pytest.raises(ResourceLimitError):
            CosetTable(S7, Subgroup(S7, []))


def test_subgroup_class_counts():
    assert len(subgroup_classes(build_group("S:4"))) == 11
    assert len(subgroup_classes(build_group("A:5"))) == 9
    assert len(subgroup_classes(build_group("S:5"))) == 19
    assert [len(subgroups_of_order(build_group("A:6"), 60))] == [2]


def test_subgroup_enumeration_bound():
    with pytest.raises(ResourceLimitError):
        subgroup_classes(build_group("S:7"), bound=1000)


def test_normal_subgroups():
    assert [N.order for N in enumerate_normal_subgroups(build_group("S:4"))] == [1, 4, 12, 24]
    assert [N.order for N in enumerate_normal_subgroups(build_group("A:5"))] == [1, 60]


def test_conjugate_subgroups():
    S4 = build_group("S:4")
    H = Subgroup(S4, [perm("(1,2)", 4)])
    K = Subgroup(S4, [perm("(3,4)", 4)])
    x = are_conjugate_subgroups(S4, H, K)
    assert x is not None
    assert K.contains(perm("(1,2)", 4).conjugate_by(x))
    L = Subgroup(S4, [perm("(1,2)(3,4)", 4)])
    assert are_conjugate_subgroups(S4, H, L) is None


def test_degree_mismatch():
    with pytest.raises(InvalidArgumentError):
        perm("(1,2)", 3) * perm("(1,2)", 4)


def closure(gens, degree):
    elements = {Permutation.identity(degree)}
    frontier = list(elements)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return frozenset(elements)


def brute_force_subgroups(G):
    """Every subgroup of a 2-generated-subgroup group, as element sets."""
    elements = list(G.elements())
    return {closure([a, b], G.degree) for a in elements for b in elements}


@pytest.mark.parametrize("spec, total", [("S:4", 30), ("A:5", 59), ("D:10", 8)])
def test_subgroup_classes_match_brute_force(spec, total):
    G = build_group(spec)
    subgroups = brute_force_subgroups(G)
    assert len(subgroups) == total
    elements = list(G.elements())
    oracle_classes = {frozenset(frozenset(s.conjugate_by(x) for s in S) for x in elements) for S in subgroups}

    classes = subgroup_classes(G)
    assert len(classes) == len(oracle_classes)
    assert sum(c.size for c in classes) == total
    assert sorted((c.order, c.size) for c in classes) == sorted(
        (len(next(iter(cls))), len(cls)) for cls in oracle_classes
    )
    for H in enumerate_subgroups(G):
        assert frozenset(H.elements()) in subgroups


def test_intersection_matches_element_sets():
    S4 = build_group("S:4")
    reps = enumerate_subgroups(S4)
    conjugators = [perm("(1,2)", 4), perm("(1,2,3,4)", 4), perm("(2,4,3)", 4)]
    for H in reps:
        for K in reps:
            for x in conjugators:
                Kx = Subgroup(S4, [g.conjugate_by(x) for g in K.generators])
                expected = set(H.elements()) & set(Kx.elements())
                assert set(intersection(H, Kx).elements()) == expected


def test_intersection_needs_a_common_ambient():
    S4, A4 = build_group("S:4"), build_group("A:4")
    H = Subgroup(S4, [perm("(1,2,3)", 4)])
    K = Subgroup(A4, [perm("(1,2)(3,4)", 4)])
    with pytest.raises(PreconditionError):
        intersection(H, K)
    S5 = build_group("S:5")
    with pytest.raises(PreconditionError):
        intersection(H, Subgroup(S5, [perm("(1,2,3)", 5)]))


def test_sifting_accepts_products_of_generators():
    rng = random.Random(3)
    for spec in ("PSL2:7", "PGL2:9", "M11"):
        G = build_group(spec)
        for _ in range(20):
            x = Permutation.identity(G.degree)
            for _ in range(30):
                x = x * rng.choice(G.generators)
            assert G.contains(x)


def test_sifting_rejects_odd_permutations():
    rng = random.Random(4)
    A6 = build_group("A:6")
    for _ in range(200):
        images = list(range(6))
        rng.shuffle(images)
        x = Permutation(images)
        assert A6.contains(x) == x.is_even()
