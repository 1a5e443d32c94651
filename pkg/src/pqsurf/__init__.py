"""Exact intersection theory and numerical invariants of product-quotient surfaces."""

from .covers import SphericalSystem, branch_fiber, make_system, quotient_data, rh_genus, validate_system
from .differentials import (
    SourceSection,
    bigness_certificate,
    gamma_pullback,
    invariance_check,
    is_holomorphic,
    vanishing_conditions,
)
from .errors import EngineInconsistencyError, ParseError, PQError, ValidationError
from .groups import (
    FiniteGroup,
    Permutation,
    Subgroup,
    conjugate_subgroup,
    cyclic_subgroup,
    element_order,
    group_from_generators,
    intersect_subgroups,
    left_cosets,
    orbit_partition,
)
from .hj import hj_evaluate, hj_expand, string_intersection_matrix, string_length
from .inputs import parse_input, realize, run_invariants, serialize_input
from .singularities import SingularityType, dual_type, enumerate_singularities, normalized_key
from .surface import DivisorClass, SurfaceModel, build_surface_model

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
