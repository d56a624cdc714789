"""
精确核心：有理数、仿射形式、线性求解、Fourier-Motzkin 与权重多项式环
"""

from gramcal.core.rational import (
    AffineForm,
    Point,
    format_rational,
    to_point,
    to_rational,
)
from gramcal.core.linalg import SolutionKind, SolutionSet, rank, rref, solve_affine
from gramcal.core.fourier_motzkin import FeasibilityResult, Relation, fm_feasible, satisfies
from gramcal.core.weights import (
    ONE,
    ZERO,
    Poly,
    evaluate,
    evaluate_complex,
    facet_indeterminate,
    format_poly,
    indeterminate,
    parse_poly,
    poly_substitute,
    reciprocal_shift,
    to_weight,
)

__all__ = [
    'AffineForm', 'Point', 'format_rational', 'to_point', 'to_rational',
    'SolutionKind', 'SolutionSet', 'rank', 'rref', 'solve_affine',
    'FeasibilityResult', 'Relation', 'fm_feasible', 'satisfies',
    'ONE', 'ZERO', 'Poly', 'evaluate', 'evaluate_complex', 'facet_indeterminate',
    'format_poly', 'indeterminate', 'parse_poly', 'poly_substitute', 'reciprocal_shift',
    'to_weight',
]
