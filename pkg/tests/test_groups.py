from math import gcd

import pytest
from sympy import factorint

from arcfact.core.config import settings_override
from arcfact.core.errors import InvalidArgumentError
from arcfact.core.parsing import parse_permutation
from arcfact.groups import (
    FiniteField,
    borel_subgroup,
    build_group,
    build_subgroup,
    catalog,
    dihedral_subgroup,
    frobenius_normalizer,
    m11_point_stabilizer,
    split_torus_normalizer,
    transitive_m11,
    verify_field,
)
from arcfact.numtheory import prime_power
from arcfact.perm import is_primitive, stabilizer


def test_field_tables():
    F = verify_field(9)
    assert F.p == 3 and F.f == 2
    assert F.multiplicative_order(F.primitive_element) == 8
    for a in range(1, 9):
        assert F.mul[a, F.invert(a)] == 1
        assert F.add[a, F.neg[a]] == 0


def test_field_elements():
    F = verify_field(8)
    x = F.element(F.primitive_element)
    assert x**7 == F.element(1)
    assert (x + x) == F.element(0)
    assert x * x.inverse() == F.element(1)


def test_frobenius_fixes_prime_field():
    F = verify_field(27)
    for a in range(3):
        assert F.frobenius(a) == a
    moved = [a for a in range(27) if F.frobenius(a) != a]
    assert len(moved) == 24


def test_reducible_modulus_is_rejected():
    # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(InvalidArgumentError):
        FiniteField(4, modulus=(1, 0, 1))


def test_non_prime_power_field():
    with pytest.raises(InvalidArgumentError):
        FiniteField(12)


@pytest.mark.parametrize(
    "spec, degree, order",
    [
        ("PSL2:7", 8, 168),
        ("PSL2:8", 9, 504),
        ("PSL2:9", 10, 360),
        ("PGL2:5", 6, 120),
        ("PGL2:9", 10, 720),
        ("PSigmaL2:9", 10, 720),
        ("PGammaL2:8", 9, 1512),
        ("PGammaL2:9", 10, 1440),
        ("M11", 11, 7920),
        ("M12", 12, 95040),
        ("wr(S:3,2)", 6, 72),
    ],
)
def test_named_group_orders(spec, degree, order):
    G = build_group(spec)
    assert G.degree == degree
    assert G.order == order


def test_projective_groups_are_primitive():
    for spec in ("PSL2:7", "PSL2:8", "PGL2:5"):
        G = build_group(spec)
        assert G.transitivity_degree() >= 2
        assert is_primitive(G).primitive


def test_catalog():
    specs = [s.canonical() for s in catalog()]
    assert "PSL2:7" in specs
    assert len(specs) == 10


def test_pgl2_5_inside_s6():
    S6 = build_group("S:6")
    H = build_subgroup(S6, "PGL2:5")
    assert H.order == 120
    assert H.is_transitive()


def test_degree_mismatch_for_subgroup():
    with pytest.raises(InvalidArgumentError):
        build_subgroup(build_group("S:6"), "S:5")


def test_dihedral_subgroups():
    G = build_group("PSL2:7")
    D = dihedral_subgroup(G, 4)
    assert D.order == 8
    assert dihedral_subgroup(build_group("PSL2:8"), 9).order == 18


def test_split_torus_normalizers():
    assert split_torus_normalizer(9, "PSL2").order == 8
    assert split_torus_normalizer(9, "PGL2").order == 16
    assert split_torus_normalizer(7, "PSL2").order == 6


def test_frobenius_normalizer():
    assert frobenius_normalizer(8, 9).order == 54


def test_borel_subgroup():
    B = borel_subgroup(7)
    assert B.order == 21
    assert B.orbits()[-1] == [7]


@pytest.mark.slow
def test_two_m11_classes():
    M12 = build_group("M12")
    A = m11_point_stabilizer(M12)
    B = transitive_m11(M12)
    assert A.order == B.order == 7920
    assert not A.is_transitive()
    assert B.is_transitive()
    assert B.contains(parse_permutation("(1,2,3,4,5,6,7,8,9,10,11)", 12))
    with settings_override(seed=11):
        again = transitive_m11(build_group("M12"))
    assert again.same_as(B)


def test_m11_is_sharply_4_transitive():
    M11 = build_group("M11")
    assert M11.transitivity_degree() == 4
    assert M11.order == 11 * 10 * 9 * 8


@pytest.mark.slow
def test_m12_is_sharply_5_transitive():
    M12 = build_group("M12")
    assert M12.transitivity_degree() == 5
    assert M12.order == 12 * 11 * 10 * 9 * 8


PRIME_POWERS_TO_81 = [q for q in range(2, 82) if len(factorint(q)) == 1]


@pytest.mark.parametrize("q", PRIME_POWERS_TO_81)
def test_projective_line_group_orders(q):
    _, f = prime_power(q)
    pgl = q * (q * q - 1)
    psl = pgl // gcd(2, q - 1)
    assert build_group(f"PSL2:{q}").order == psl
    assert build_group(f"PGL2:{q}").order == pgl
    assert build_group(f"PGammaL2:{q}").order == f * pgl


@pytest.mark.parametrize("spec", [s.canonical() for s in catalog()])
def test_orbit_stabilizer_over_catalog(spec):
    G = build_group(spec)
    for x in {0, G.degree - 1}:
        assert len(G.orbit(x)) * stabilizer(G, x).order == G.order
