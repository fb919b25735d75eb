from .permutation import Permutation, PermutationError, identity, compose, inverse, conjugate, commutator, cycles, \
    element_order, lcm_all, shift
from .finite_group import FiniteGroup, EnumerationCapError, NormalSubgroupGuardError, DEFAULT_ENUM_CAP, \
    DEFAULT_MAX_NORMAL_CLOSURES, enumerate_group, trivial_subgroup, normal_closure, derived_subgroup, derived_series, \
    is_solvable, is_abelian, conjugacy_classes, normal_subgroups, is_direct_product, direct_product
