import random

import pytest

from arcfact.core.errors import InvalidArgumentError, PreconditionError
from arcfact.core.parsing import parse_permutation
from arcfact.factor import (
    check_triple,
    criteria_equivalence,
    factorizations,
    find_isomorphism,
    homogeneous_search,
    is_factorization,
    is_simple,
    isomorphism_verdict,
    one_factor_transitive,
    transitive_on_cosets,
)
from arcfact.factor.certificate import H_ON_K, K_ON_H, ORDER
from arcfact.groups import (
    borel_subgroup,
    build_group,
    build_subgroup,
    dihedral_subgroup,
    frobenius_normalizer,
    split_torus_normalizer,
)
from arcfact.perm import Subgroup, stabilizer, subgroups_of_order


def test_s6_pgl2_5_times_wreath():
    G = build_group("S:6")
    H = build_subgroup(G, "PGL2:5")
    K = build_subgroup(G, "wr(S:3,2)")
    cert = is_factorization(G, H, K, cross_check=True)
    assert cert.verdict
    assert cert.order_intersection == 12
    assert cert.criteria_checked == [ORDER, H_ON_K, K_ON_H]
    verdict = one_factor_transitive(G, H, K)
    assert verdict.h_transitive


def test_psl2_7_factorizations():
    G = build_group("PSL2:7")
    B = borel_subgroup(7)
    S4 = subgroups_of_order(G, 24)[0]
    cert = is_factorization(G, B, S4, cross_check=True)
    assert cert.verdict and cert.order_intersection == 3
    D8 = dihedral_subgroup(G, 4)
    cert = is_factorization(G, D8, B, cross_check=True)
    assert cert.verdict and cert.order_intersection == 1


def test_non_factorization():
    G = build_group("S:5")
    H = stabilizer(G, 0)
    K = stabilizer(G, 1)
    cert = is_factorization(G, H, K, cross_check=True)
    assert not cert.verdict
    assert cert.order_intersection == 6
    assert not transitive_on_cosets(G, H, H)


def test_factor_must_be_subgroup():
    G = build_group("A:5")
    S5 = build_group("S:5")
    with pytest.raises(InvalidArgumentError):
        is_factorization(G, S5, G)


def test_criteria_agree_on_random_triples():
    checks = criteria_equivalence(40, seed=11, specs=("S:4", "A:5", "PSL2:7"))
    assert len(checks) == 40
    assert any(c.verdict for c in checks)


def test_check_triple_on_a_known_factorization():
    G = build_group("S:5")
    H = stabilizer(G, 0)
    K = Subgroup(G, [parse_permutation("(1,2,3,4,5)", 5)])
    check = check_triple("S:5", G, H, K, random.Random(0))
    assert check.verdict
    assert check.intersection_order == 1


def test_isomorphism_certified():
    A6 = build_group("A:6")
    a, b = subgroups_of_order(A6, 60)
    images = find_isomorphism(a, b)
    assert images is not None
    verdict = isomorphism_verdict(a, b, certify_bound=100)
    assert verdict.isomorphic and verdict.method == "certified"


def test_non_isomorphic_same_order():
    S4 = build_group("S:4")
    cyclic = Subgroup(S4, [parse_permutation("(1,2,3,4)", 4)])
    klein = Subgroup(S4, [parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)])
    assert find_isomorphism(cyclic, klein) is None
    assert not isomorphism_verdict(cyclic, klein).isomorphic


def test_is_simple():
    assert is_simple(build_group("A:5"))
    assert not is_simple(build_group("S:5"))
    assert is_simple(build_group("C:7"))


def test_factorizations_of_s4():
    G = build_group("S:4")
    found = factorizations(G)
    assert found
    for f in found:
        assert f.h.order * f.k.order == f.intersection_order * G.order
        verdict = one_factor_transitive(G, f.h, f.k)
        assert verdict.h_transitive or verdict.k_transitive


def test_one_factor_transitive_preconditions():
    with pytest.raises(PreconditionError):
        G = build_group("PSL2:7")
        one_factor_transitive(G, borel_subgroup(7), dihedral_subgroup(G, 4))
    S5 = build_group("S:5")
    with pytest.raises(PreconditionError):
        one_factor_transitive(S5, stabilizer(S5, 0), stabilizer(S5, 1))


def test_homogeneous_search_arguments():
    G = build_group("S:4")
    with pytest.raises(InvalidArgumentError):
        homogeneous_search(G, mode="both")
    with pytest.raises(InvalidArgumentError):
        homogeneous_search(G, min_index=1)
    with pytest.raises(PreconditionError):
        homogeneous_search(G, mode="conj")


def test_dihedral_psl2_9_has_no_conjugate_factorization():
    D8 = split_torus_normalizer(9, "PSL2")
    report = homogeneous_search(D8, ambient=D8.ambient, mode="conj", min_index=2)
    assert report.empty
    assert report.group_order == 8


def test_dihedral_pgl2_9_has_no_conjugate_factorization():
    D16 = split_torus_normalizer(9, "PGL2")
    assert homogeneous_search(D16, ambient=D16.ambient, mode="conj", min_index=2).empty


def test_dihedral_psl2_7_has_no_conjugate_factorization():
    G = build_group("PSL2:7")
    D8 = dihedral_subgroup(G, 4)
    assert homogeneous_search(D8, ambient=G, mode="conj", min_index=2).empty


@pytest.mark.parametrize("mode", ["conj", "iso"])
def test_psl2_8_d18_has_no_factorization_of_index_3(mode):
    G = build_group("PSL2:8")
    D18 = dihedral_subgroup(G, 9)
    assert homogeneous_search(D18, ambient=G, mode=mode, min_index=3).empty


@pytest.mark.parametrize("mode", ["conj", "iso"])
def test_c9_c6_has_no_factorization_of_index_3(mode):
    N = frobenius_normalizer(8, 9)
    report = homogeneous_search(N, ambient=N.ambient, mode=mode, min_index=3)
    assert report.group_order == 54
    assert report.empty


def test_homogeneous_factorization_of_a_small_group():
    # S3 x 1 and 1 x S3 factor S3 x S3
    G = build_group("direct(S:3,S:3)")
    report = homogeneous_search(G, mode="iso", min_index=2)
    assert report.pairs
    for pair in report.pairs:
        assert pair.a.order == pair.b.order
        assert pair.intersection_order * G.order == pair.a.order * pair.b.order


@pytest.mark.slow
def test_a6_homogeneous_search():
    A6 = build_group("A:6")
    report = homogeneous_search(A6, mode="iso", min_index=3)
    assert [p.intersection_order for p in report.pairs] == [10]
    pair = report.pairs[0]
    assert pair.a.order == pair.b.order == 60
    assert is_simple(pair.a) and is_simple(pair.b)
    assert pair.a.is_transitive() != pair.b.is_transitive()
    assert homogeneous_search(A6, ambient=A6, mode="conj", min_index=3).empty


@pytest.mark.slow
def test_m12_as_product_of_two_m11():
    from arcfact.groups import m11_point_stabilizer, transitive_m11
    from arcfact.perm import are_conjugate_subgroups

    M12 = build_group("M12")
    A, B = m11_point_stabilizer(M12), transitive_m11(M12)
    cert = is_factorization(M12, A, B)
    assert cert.verdict
    assert cert.order_intersection == 660
    assert are_conjugate_subgroups(M12, A, B) is None
