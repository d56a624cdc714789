"""
形式和相等性的精确判定：超平面排列胞腔 + 随机回退
"""

from gramcal.verify.arrangement import (
    Cell,
    CellDecomposition,
    arrangement_cells,
    canonical_hyperplanes,
    cell_soundness,
    format_signs,
)
from gramcal.verify.identity import (
    Verdict,
    VerdictStatus,
    Witness,
    check_all,
    identity_check,
    random_point_check,
)

__all__ = [
    'Cell', 'CellDecomposition', 'arrangement_cells', 'canonical_hyperplanes', 'cell_soundness',
    'format_signs',
    'Verdict', 'VerdictStatus', 'Witness', 'check_all', 'identity_check', 'random_point_check',
]
