"""
src/geometry/__init__.py

Lattice-point realizations of the Tamari order and their exact checks.
"""

from .canopy import Canopy, all_canopies, canopy, fiber, section
from .codes import (
    CoordinateMap,
    LatticePoint,
    loday_coords,
    loday_coords_by_subtrees,
    tamari_code,
    to_word,
)
from .facets import Facet, FacetSystem, affine_dimension, facet_system
from .verify import (
    AssociahedronReport,
    EdgeVectorReport,
    HypercubeReport,
    certify_extreme,
    covering_edge_vectors,
    export_coords,
    hull_edges,
    points_for,
    verify_associahedron,
    verify_hypercube,
)

__all__ = [
    "AssociahedronReport",
    "Canopy",
    "CoordinateMap",
    "EdgeVectorReport",
    "Facet",
    "FacetSystem",
    "HypercubeReport",
    "LatticePoint",
    "affine_dimension",
    "all_canopies",
    "canopy",
    "certify_extreme",
    "covering_edge_vectors",
    "export_coords",
    "facet_system",
    "fiber",
    "hull_edges",
    "loday_coords",
    "loday_coords_by_subtrees",
    "points_for",
    "section",
    "tamari_code",
    "to_word",
    "verify_associahedron",
    "verify_hypercube",
]
