"""
分解构造：Brianchon-Gram、面展开、Brion、极分解与截顶流程
"""

from gramcal.decomp.brianchon_gram import (
    bg_via_faces,
    body_lineality,
    brianchon_gram,
    brion_split,
    cone_face_expansion,
    face_expansion,
    product_expand,
)
from gramcal.decomp.polar import (
    PolarizedCone,
    edge_directions,
    is_polarizing,
    polar_decompose,
    polar_group,
    polar_group_sum,
    polar_sum,
    polarize_vertex_cone,
    sample_polarizing,
)
from gramcal.decomp.chopping import ChopData, NonSimpleWitness, VertexChop, chop_nonsimple, nonsimple_bg_witness
from gramcal.decomp.base import BaseDecomposition, DecompositionResult
from gramcal.decomp.registry import DecompositionRegistry

__all__ = [
    'bg_via_faces', 'body_lineality', 'brianchon_gram', 'brion_split', 'cone_face_expansion',
    'face_expansion', 'product_expand',
    'PolarizedCone', 'edge_directions', 'is_polarizing', 'polar_decompose', 'polar_group',
    'polar_group_sum', 'polar_sum', 'polarize_vertex_cone', 'sample_polarizing',
    'ChopData', 'NonSimpleWitness', 'VertexChop', 'chop_nonsimple', 'nonsimple_bg_witness',
    'BaseDecomposition', 'DecompositionResult', 'DecompositionRegistry',
]
