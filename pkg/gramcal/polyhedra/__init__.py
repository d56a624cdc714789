"""
H-表示多面体、面格与切锥
"""

from gramcal.polyhedra.polyhedron import HPolyhedron, build_polyhedron, irredundant_indices, is_bounded
from gramcal.polyhedra.faces import (
    Face,
    FaceLattice,
    Genericity,
    GenericityReport,
    Vertex,
    classify_genericity,
    enumerate_faces,
    enumerate_vertices,
    smallest_face_containing,
)
from gramcal.polyhedra.cones import TangentCone, lineality_dim, relative_interior_point, tangent_cone

__all__ = [
    'HPolyhedron', 'build_polyhedron', 'irredundant_indices', 'is_bounded',
    'Face', 'FaceLattice', 'Genericity', 'GenericityReport', 'Vertex',
    'classify_genericity', 'enumerate_faces', 'enumerate_vertices', 'smallest_face_containing',
    'TangentCone', 'lineality_dim', 'relative_interior_point', 'tangent_cone',
]
