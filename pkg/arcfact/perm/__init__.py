"""
Permutation-group engine: permutations, stabilizer chains, orbits, blocks,
cosets and subgroup lattices.
"""

from .permutation import Permutation
from .group import (
    PermGroup,
    PrimitivityResult,
    Subgroup,
    block_system,
    conjugate,
    contains,
    derived_subgroup,
    group_from_generators,
    intersection,
    is_primitive,
    minimal_block,
    normal_closure,
    normalizer,
    orbit,
    orbits,
    stabilizer,
)
from .cosets import CosetTable, are_conjugate_subgroups, coset_action, subgroup_core
from .lattice import (
    CayleyTable,
    SubgroupClass,
    cayley_table,
    conjugacy_class_representatives,
    enumerate_normal_subgroups,
    enumerate_subgroups,
    subgroup_classes,
    subgroups_of_order,
)

__all__ = [
    "Permutation",
    "PermGroup",
    "PrimitivityResult",
    "Subgroup",
    "block_system",
    "conjugate",
    "contains",
    "derived_subgroup",
    "group_from_generators",
    "intersection",
    "is_primitive",
    "minimal_block",
    "normal_closure",
    "normalizer",
    "orbit",
    "orbits",
    "stabilizer",
    "CosetTable",
    "are_conjugate_subgroups",
    "coset_action",
    "subgroup_core",
    "CayleyTable",
    "SubgroupClass",
    "cayley_table",
    "conjugacy_class_representatives",
    "enumerate_normal_subgroups",
    "enumerate_subgroups",
    "subgroup_classes",
    "subgroups_of_order",
]
