"""Exact invariants, equivariants and invariant subspaces for Lorentz subgroups."""

from .exceptions import (
    DimensionError,
    LorentzInvariantsError,
    NotInvariantError,
    NotInvolutionError,
    NotLorentzError,
    ParseError,
    UndecidedError,
    UnverifiableError,
)
from .scalar import COS, COSH, ONE, SIN, SINH, ZERO, Scalar, as_scalar, parse_scalar
from .linalg import (
    ComponentTag,
    Matrix,
    Undecided,
    Vector,
    classify_component,
    eigen_lines,
    is_lorentz,
    kernel,
    lorentz_inverse,
    metric_j,
    minkowski_product,
)
from .polyring import Poly, algebra_member_bounded, linear_reduce, parse_poly, substitute_linear
from .invariants import GroupSpec, algorithm_generators, involution_step, reynolds_R, reynolds_S
from .equivariants import (
    PolyMap,
    diagonal_lift,
    equivariant_from_invariant,
    gradient_map,
    is_equivariant,
    module_generators,
    pairing_invariant,
)
from .subspaces import (
    CausalType,
    LineFamily,
    PlaneFamily,
    Subspace,
    conjugacy_matrix_3d,
    fix_line_catalog,
    fix_subspace,
    invariant_complement,
    invariant_lines,
    invariant_planes,
    is_nondegenerate,
    orthogonal_complement,
    subspace_type,
    vector_type,
)

__version__ = "0.1.0"
