"""Exact solutions of Jensen's functional equations on finite groups.

``f(xy) + f(xy^-1) = 2f(x)`` and ``f(xy) + f(y^-1 x) = 2f(x)`` with
``f(e) = 0`` and values in a finitely generated abelian group, solved via
Smith normal form and compared with ``Hom(G, H)``.
"""

from ._kernels import BACKEND
from .coeff import CoeffElement, CoeffGroup, parse_coeff, torsion_subgroup
from .group import (
    AbelianStructure,
    FiniteGroup,
    GroupSizeError,
    abelian_decompose,
    abelianization,
    closure_from_generators,
    commutator_subgroup,
    cyclic_group,
    group_from_table,
    load_group_file,
    symmetric_group,
)
from .identities import (
    IdentityReport,
    check_order_two,
    check_prop_2_1,
    check_prop_3_1,
    check_rearrangement,
    closed_form_eval,
    verify_theorems,
)
from .perm import Permutation, Transposition, parse_cycles
from .snf import SNFResult, smith_normal_form
from .solver import (
    ComparisonReport,
    ConstraintSystem,
    GroupMap,
    SolutionGroup,
    Variant,
    brute_force_solutions,
    build_constraints,
    compare,
    hom_group,
    solve,
    solve_mod,
)

__version__ = "0.1.0"
