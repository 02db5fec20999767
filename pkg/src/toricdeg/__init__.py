"""Exact toolkit for planar toric degenerations of toric surfaces."""

from .polygon import (
    Equiaffinity,
    LatticePolygon,
    PolygonError,
    PolygonInvariants,
    apply,
    are_equivalent,
    canonical_form,
    ehrhart_count,
    enumerate_polygons,
    invariants,
    lattice_points,
)
from .triangulation import (
    Cell,
    Star,
    Subdivision,
    SubdivisionError,
    Triangulation,
    TriangulationError,
    canonical_key,
    enumerate_triangulations,
    equivalent_triangulations,
    intermediate_subdivision,
    refine,
    star,
    validate,
)
from .regularity import (
    FoldConstraint,
    LiftingFunction,
    flatten_lifting,
    fold_constraints,
    is_regular,
)
from .secant import (
    CatalogEntry,
    CatalogMissError,
    NotDecidableError,
    SingularityRecord,
    catalog_lookup,
    classify_singularities,
    count_skew_k_sets,
    find_delightful,
    is_k_delightful,
    lower_bound_nu_k,
    nu2_toric_smooth,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
