"""Eigenvalue region of stochastic matrices: boundary, membership, realization."""

from .arcs import (
    ArcParams,
    ArcType,
    arc_params,
    g_factor,
    g_hat,
    ito_numerator,
    ito_roots,
    reduced_ito_poly,
)
from .boundary import (
    BoundaryPoint,
    NoSignChange,
    F_value,
    boundary_moduli,
    boundary_point,
    sample_boundary,
    solve_rho,
)
from .farey import (
    ExactFareyPoint,
    FareyPair,
    bracketing_pair,
    conjugate_pair,
    farey_pairs,
    farey_sequence,
    is_farey_pair,
)
from .matrices import is_stochastic, random_stochastic
from .poly import NonConvergence, Poly, RootSet, all_roots, char_poly, eigenvalues
from .realize import (
    NotInRegion,
    RealizationKind,
    RealizationResult,
    brauer_scale,
    companion_typeI,
    cyclic_combo,
    inflate,
    realize_subdominant,
    verify_subdominant,
)
from .region import (
    MembershipVerdict,
    NotFoundBelowCap,
    OutsideUnitDisc,
    contains,
    contains_many,
    min_order,
    scale_into,
)

__version__ = "0.1.0"
