"""
Named groups: symmetric, alternating, cyclic, dihedral, projective-line
groups over small fields, Mathieu groups, and wreath/direct/coset products.
"""

from .fields import FieldElement, FiniteField, verify_field
from .catalog import (
    CATALOG_SPECS,
    borel_subgroup,
    build_group,
    build_named,
    build_subgroup,
    catalog,
    dihedral_subgroup,
    frobenius_normalizer,
    m11_point_stabilizer,
    split_torus_normalizer,
    transitive_m11,
)

__all__ = [
    "FieldElement",
    "FiniteField",
    "verify_field",
    "CATALOG_SPECS",
    "borel_subgroup",
    "build_group",
    "build_named",
    "build_subgroup",
    "catalog",
    "dihedral_subgroup",
    "frobenius_normalizer",
    "m11_point_stabilizer",
    "split_torus_normalizer",
    "transitive_m11",
]
