"""
加权特征函数与形式和
"""

from gramcal.indicators.weighted import (
    WeightAssignment,
    WeightedPolyhedron,
    cone_body,
    face_body,
    flat_body,
    uniform_weight,
    weight_at,
)
from gramcal.indicators.formal_sum import FormalSum, Term, fs_evaluate, fs_substitute

__all__ = [
    'WeightAssignment', 'WeightedPolyhedron', 'cone_body', 'face_body', 'flat_body',
    'uniform_weight', 'weight_at',
    'FormalSum', 'Term', 'fs_evaluate', 'fs_substitute',
]
