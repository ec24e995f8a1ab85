import pytest

from arcfact.core.errors import (
    DegenerateDigraphError,
    InvalidArgumentError,
    NotADigraphError,
    PreconditionError,
    ResourceLimitError,
)
from arcfact.core.config import settings_override
from arcfact.core.parsing import parse_permutation
from arcfact.digraph import (
    PRIME_CYCLE,
    VALENCY_AT_LEAST_3,
    StabilizerChainAlongArc,
    arc_stabilizer,
    arc_transitivity,
    build,
    catalog_battery,
    count_s_arcs,
    directed_cycle,
    group_instances,
    lemma26_audit,
    normal_subgroup_descent,
    s_arc_criterion,
    s_arc_orbit_size,
    s_arcs_direct,
    valency_or_cycle_audit,
    valency_power_divides,
    vertex_primitivity,
    wreath_digraph,
)
from arcfact.digraph.battery import EVEN_WREATH_GENERATORS
from arcfact.groups import build_group
from arcfact.perm import Subgroup, group_from_generators, stabilizer


def paley7():
    """C7:C3 on F_7 with the squares as out-neighbours of 0."""
    translation = parse_permutation("(1,2,3,4,5,6,7)", 7)
    doubling = parse_permutation("(2,3,5)(4,7,6)", 7)
    G = group_from_generators([translation, doubling])
    return build(G, stabilizer(G, 0), translation)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_directed_prime_cycles(p):
    d = directed_cycle(p)
    assert d.order == p
    assert d.valency == 1
    assert d.connected
    assert vertex_primitivity(d).primitive
    assert arc_transitivity(d, 5) == 5
    assert s_arc_criterion(d, 5).transitive
    assert s_arc_orbit_size(d, 5) == p
    assert valency_or_cycle_audit(d) == PRIME_CYCLE


def test_c2_is_not_a_digraph():
    with pytest.raises(NotADigraphError) as info:
        directed_cycle(2)
    err = info.value
    g = build_group("C:2").generators[0]
    assert err.h * g * err.h2 == g.inverse()


def test_loop_is_rejected():
    S4 = build_group("S:4")
    H = stabilizer(S4, 0)
    with pytest.raises(DegenerateDigraphError):
        build(S4, H, parse_permutation("(2,3)", 4))


def test_element_outside_group():
    A4 = build_group("A:4")
    with pytest.raises(InvalidArgumentError):
        build(A4, Subgroup(A4, []), parse_permutation("(1,2)", 4))


def test_wreath_digraph_is_2_arc_regular():
    d = wreath_digraph()
    assert (d.order, d.valency, d.in_valency) == (6, 2, 2)
    assert d.group.order == 24
    assert list(d.in_degrees()) == [2] * 6
    chain = StabilizerChainAlongArc(d, 3)
    assert chain.orders() == [4, 2, 1, 1]
    assert count_s_arcs(d, 2) == 24
    assert s_arcs_direct(d, 2, chain=chain).transitive
    assert s_arc_criterion(d, 2, chain=chain).transitive
    assert not s_arcs_direct(d, 3, chain=chain).transitive
    result = s_arc_criterion(d, 3, chain=chain)
    assert not result.transitive
    assert result.failing_level == 2
    assert arc_transitivity(d, 5) == 2
    assert s_arc_orbit_size(d, 2) == 24
    assert valency_power_divides(d, 2)
    assert arc_stabilizer(d).order == 2


def test_even_wreath_digraph_is_arc_regular():
    d = wreath_digraph(even=True)
    assert d.group.order == 12
    assert arc_transitivity(d, 3) == 1
    assert not vertex_primitivity(d).primitive


def test_normal_subgroup_descent():
    d = wreath_digraph()
    L = group_from_generators([parse_permutation(t, 6) for t in EVEN_WREATH_GENERATORS])
    result = normal_subgroup_descent(d, L, 2)
    assert result.holds
    assert result.orbit_size == result.n_arcs == 12


def test_normal_subgroup_descent_preconditions():
    d = wreath_digraph()
    with pytest.raises(PreconditionError, match="normal"):
        normal_subgroup_descent(d, d.subgroup, 2)
    even = wreath_digraph(even=True)
    L = group_from_generators([parse_permutation(t, 6) for t in EVEN_WREATH_GENERATORS])
    with pytest.raises(PreconditionError, match="arc-transitive"):
        normal_subgroup_descent(even, L, 2)


def test_paley_digraph_of_order_7():
    d = paley7()
    assert d.order == 7
    assert d.valency == 3
    assert vertex_primitivity(d).primitive
    assert valency_or_cycle_audit(d) == VALENCY_AT_LEAST_3
    assert arc_transitivity(d, 3) == 1
    assert s_arcs_direct(d, 2).n_arcs == 63


def test_arc_bound():
    with pytest.raises(ResourceLimitError):
        s_arcs_direct(paley7(), 3, bound=10)


def test_lemma26_audit_passes_on_faithful_digraphs():
    audit = lemma26_audit(directed_cycle(5))
    assert audit.passed and audit.checked == 0
    assert lemma26_audit(wreath_digraph()).passed


def test_lemma26_audit_flags_unfaithful_action():
    C6 = build_group("C:6")
    g = C6.generators[0]
    H = Subgroup(C6, [g**3])
    d = build(C6, H, g)
    assert d.connected
    assert not d.is_faithful()
    audit = lemma26_audit(d)
    assert not audit.passed
    assert audit.offending.order == 2


def test_lemma26_audit_needs_connected_digraph():
    C6 = build_group("C:6")
    g = C6.generators[0]
    d = build(C6, Subgroup(C6, []), g**2)
    assert not d.connected
    with pytest.raises(PreconditionError):
        lemma26_audit(d)


FROBENIUS_21 = "gens(7:(1,2,3,4,5,6,7);(2,3,5)(4,7,6))"


def test_small_battery_verifiers_agree():
    battery = catalog_battery(groups=[FROBENIUS_21])
    assert len(battery) > 6
    assert battery.limited == {}
    for inst in battery:
        d = inst.digraph
        chain = StabilizerChainAlongArc(d, 2)
        assert s_arcs_direct(d, 2, chain=chain).transitive == s_arc_criterion(d, 2, chain=chain).transitive


def test_battery_reports_cap():
    full = catalog_battery(groups=[FROBENIUS_21])
    capped = catalog_battery(groups=[FROBENIUS_21], cap=1)
    assert len(capped) == 7
    assert capped.limited[FROBENIUS_21] == f"capped at 1 of {len(full) - 6} instances"


def test_battery_reports_groups_over_subgroup_bound():
    with settings_override(profile="desk"):
        battery = catalog_battery(groups=["S:7"])
    assert "S:7" in battery.limited
    assert len(battery) == 6


def test_battery_takes_one_double_coset_per_normalizer_class():
    # H = 1: one instance per non-real conjugacy class of F21
    labels = [inst.label for inst in group_instances(FROBENIUS_21) if "[1]" in inst.label]
    assert len(labels) == 4


def _check_battery_invariants(battery, levels):
    for inst in battery:
        d = inst.digraph
        assert d.in_valency == d.valency, inst.label
        assert (d.in_degrees() == d.valency).all(), inst.label
        assert all(len(d.in_neighbours(v)) == d.valency for v in range(d.order)), inst.label
        assert d.is_antisymmetric() == (not set(d.out0) & set(d.in0)), inst.label
        assert d.is_antisymmetric(), inst.label
        chain = StabilizerChainAlongArc(d, max(levels))
        verdicts = {}
        for s in levels:
            try:
                verdicts[s] = s_arcs_direct(d, s, chain=chain).transitive
            except ResourceLimitError:
                continue
        for s in levels:
            if verdicts.get(s) and s - 1 in verdicts:
                assert verdicts[s - 1], inst.label


def test_small_battery_invariants():
    _check_battery_invariants(catalog_battery(groups=[FROBENIUS_21, "S:4", "A:5"]), (2, 3))


@pytest.mark.slow
def test_full_battery_verifiers_agree():
    battery = catalog_battery()
    assert set(battery.limited) <= {"S:7", "A:7"}
    _check_battery_invariants(battery, (2, 3))
    for inst in battery:
        d = inst.digraph
        chain = StabilizerChainAlongArc(d, 3)
        for s in (2, 3):
            try:
                direct = s_arcs_direct(d, s, chain=chain)
            except ResourceLimitError:
                continue
            assert direct.transitive == s_arc_criterion(d, s, chain=chain).transitive, inst.label
