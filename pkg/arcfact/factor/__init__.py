"""
Factorization predicates and the homogeneous-factorization search.
"""

from .certificate import FactorizationCertificate, as_subgroup, is_factorization, transitive_on_cosets
from .isomorphism import GroupProfile, IsomorphismVerdict, find_isomorphism, is_simple, isomorphism_verdict, profile
from .equivalence import TripleCheck, check_triple, criteria_equivalence, random_subgroup
from .homogeneous import (
    MODES,
    Factorization,
    HomFactPair,
    HomFactReport,
    OneFactorVerdict,
    factorizations,
    homogeneous_search,
    one_factor_transitive,
)

__all__ = [
    "FactorizationCertificate",
    "as_subgroup",
    "is_factorization",
    "transitive_on_cosets",
    "GroupProfile",
    "IsomorphismVerdict",
    "find_isomorphism",
    "is_simple",
    "isomorphism_verdict",
    "profile",
    "TripleCheck",
    "check_triple",
    "criteria_equivalence",
    "random_subgroup",
    "MODES",
    "Factorization",
    "HomFactPair",
    "HomFactReport",
    "OneFactorVerdict",
    "factorizations",
    "homogeneous_search",
    "one_factor_transitive",
]
