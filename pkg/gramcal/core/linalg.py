"""
精确线性代数：行最简形、秩、仿射方程组求解
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from gramcal.core.rational import AffineForm, Point, check_dimension, format_rational, vec_sub


class SolutionKind(Enum):
    """方程组解集类型"""
    UNIQUE = "unique"
    AFFINE = "affine"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class SolutionSet:
    """解集描述：特解 + 方向基；无解时 point 为 None"""

    kind: SolutionKind
    point: Optional[Point] = None
    directions: Tuple[Point, ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        """解集维数，无解为 -1"""
        if self.kind == SolutionKind.INFEASIBLE:
            return -1
        return len(self.directions)

    def is_feasible(self) -> bool:
        return self.kind != SolutionKind.INFEASIBLE

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'point': None if self.point is None else [format_rational(a) for a in self.point],
            'directions': [[format_rational(a) for a in d] for d in self.directions],
        }


def rref(rows: Sequence[Sequence[Fraction]], n_cols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """
    行最简形（只对前 n_cols 列选主元）

    Returns:
        (化简后的非零行, 主元列)
    """
    matrix = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [a / lead for a in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix, pivots


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    _, pivots = rref(vectors, len(vectors[0]))
    return len(pivots)


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """点集仿射包的维数，空集为 -1"""
    if not points:
        return -1
    base = points[0]
    return rank([vec_sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def solve_affine(equations: Sequence[AffineForm], dim: int) -> SolutionSet:
    """
    求解 {form(x) = 0 : form in equations}

    Args:
        equations: 仿射形式列表，每个都置为零
        dim: 环境维数

    Returns:
        SolutionSet（唯一点 / 仿射子空间 / 无解）
    """
    check_dimension(equations, dim)
    # <u, x> + mu = 0  ->  <u, x> = -mu
    rows = [list(e.normal) + [-e.offset] for e in equations]
    matrix, pivots = rref(rows, dim) if rows else ([], [])

    for row in matrix[len(pivots):]:
        if row[dim] != 0:
            return SolutionSet(SolutionKind.INFEASIBLE)

    point = [Fraction(0)] * dim
    for r, c in enumerate(pivots):
        point[c] = matrix[r][dim]

    free = [c for c in range(dim) if c not in pivots]
    directions = []
    for f in free:
        direction = [Fraction(0)] * dim
        direction[f] = Fraction(1)
        for r, c in enumerate(pivots):
            direction[c] = -matrix[r][f]
        directions.append(tuple(direction))

    kind = SolutionKind.UNIQUE if not directions else SolutionKind.AFFINE
    return SolutionSet(kind, tuple(point), tuple(directions))
