"""Exact computation of Burnside rings, bifree double Burnside groups, and
orthogonal unit groups for small finite groups."""

from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupMorphism,
    GroupOrderError,
    OuterAutomorphismGroup,
    SpecParseError,
    Subgroup,
    SubgroupLattice,
    build_group,
    center,
    centralizer,
    conjugate_subgroup,
    direct_product,
    is_nilpotent,
    isomorphisms,
    normalizer,
    outer_automorphism_group,
    subgroup_lattice,
)
from .burnside import (
    BurnsideElement,
    NotIntegral,
    TableOfMarks,
    burnside_one,
    mark_inverse,
    marks,
    table_of_marks,
    unit_group,
)
from .bisets import (
    BisetElement,
    TwistedClassTable,
    TwistedDiagonal,
    biset_basis,
    biset_from_marks,
    biset_identity,
    diagonal,
    class_table,
    conjugacy_test,
    dual,
    eta,
    iota,
    mark_at,
    biset_marks,
    n_alpha,
    rho,
    star,
    tensor,
    tensor_mark,
    triple_orbits,
    twisted_classes,
)
from .units import (
    OrthogonalUnit,
    UnitGroupStructure,
    frobenius_units,
    is_uniform,
    naive_orthogonal,
    principal_iso,
    search_orthogonal,
    structure,
    theorem_report,
    verify_two_sided,
)

__version__ = "0.1.0"
