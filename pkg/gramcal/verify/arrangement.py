"""
超平面排列的胞腔分解

胞腔 = 对每个超平面取符号 (-, 0, +) 后可行的集合；
超平面都在列表中的加权指示函数在每个胞腔上为常数
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from gramcal.config import GramcalConfig
from gramcal.core.fourier_motzkin import Constraint, Relation, fm_feasible
from gramcal.core.linalg import rank
from gramcal.core.rational import AffineForm, Point, check_dimension, format_rational
from gramcal.errors import CapExceededError

SignVector = Tuple[int, ...]

_SYMBOL = {-1: '-', 0: '0', 1: '+'}


def sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def format_signs(signs: SignVector) -> str:
    return ''.join(_SYMBOL[s] for s in signs)


def canonical_hyperplanes(forms: Iterable[AffineForm], dim: int) -> List[AffineForm]:
    """规范化后去重（保持首次出现顺序），法向量为零的形式不产生超平面"""
    forms = list(forms)
    check_dimension(forms, dim)
    seen: Dict[AffineForm, None] = {}
    for form in forms:
        if form.is_trivial():
            continue
        seen.setdefault(form.canonical(), None)
    return list(seen)


@dataclass(frozen=True)
class Cell:
    signs: SignVector
    point: Point

    def to_dict(self) -> dict:
        return {
            'signs': format_signs(self.signs),
            'point': [format_rational(a) for a in self.point],
        }


@dataclass(frozen=True)
class CellDecomposition:
    """超平面（规范形式）与全部可行符号向量及代表点，按符号向量排序"""

    dim: int
    hyperplanes: Tuple[AffineForm, ...]
    cells: Tuple[Cell, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.cells)

    def index_of(self, form: AffineForm) -> Optional[int]:
        """form 所在超平面的下标，不在排列中返回 None"""
        if form.is_trivial():
            return None
        key = form.canonical()
        try:
            return self.hyperplanes.index(key)
        except ValueError:
            return None

    def covers(self, forms: Iterable[AffineForm]) -> bool:
        return all(f.is_trivial() or self.index_of(f) is not None for f in forms)

    def signs_at(self, x: Sequence[Fraction]) -> SignVector:
        return tuple(sign_of(h.evaluate(x)) for h in self.hyperplanes)

    def by_dimension(self) -> Dict[int, int]:
        """各维胞腔个数（维数 = d - 零符号超平面法向的秩）"""
        counts: Dict[int, int] = {}
        for cell in self.cells:
            zero = [self.hyperplanes[i].normal for i, s in enumerate(cell.signs) if s == 0]
            k = self.dim - rank(zero)
            counts[k] = counts.get(k, 0) + 1
        return counts


def _relation(form: AffineForm, sign: int) -> Constraint:
    if sign == 0:
        return (form, Relation.EQ)
    return (form if sign > 0 else -form, Relation.GT)


def arrangement_cells(forms: Sequence[AffineForm], dim: int, cell_cap: Optional[int] = None,
                      verbose: Optional[bool] = None) -> CellDecomposition:
    """
    枚举排列的全部胞腔

    深度优先地给每个超平面取 -, 0, + ，用 fm_feasible 剪枝；
    父节点见证点的符号与所选符号一致时直接继承，不再求解

    Args:
        forms: 仿射形式（会被规范化去重）
        dim: 维数
        cell_cap: 超平面个数上限，默认 GramcalConfig.CELL_CAP

    Returns:
        CellDecomposition

    Raises:
        CapExceededError: 去重后超平面个数超过上限
    """
    cap = GramcalConfig.CELL_CAP if cell_cap is None else cell_cap
    verbose = GramcalConfig.VERBOSE if verbose is None else verbose
    hyperplanes = canonical_hyperplanes(forms, dim)
    if len(hyperplanes) > cap:
        raise CapExceededError(len(hyperplanes), cap)

    cells: List[Cell] = []
    # 栈元素：(已定符号, 约束, 见证点)
    stack: List[Tuple[SignVector, List[Constraint], Point]] = [
        ((), [], tuple(Fraction(0) for _ in range(dim)))
    ]
    while stack:
        signs, system, witness = stack.pop()
        k = len(signs)
        if k == len(hyperplanes):
            cells.append(Cell(signs, witness))
            continue
        h = hyperplanes[k]
        inherited = sign_of(h.evaluate(witness))
        for s in (-1, 0, 1):
            child = system + [_relation(h, s)]
            if s == inherited:
                stack.append((signs + (s,), child, witness))
                continue
            result = fm_feasible(child, dim)
            if result:
                stack.append((signs + (s,), child, result.witness))

    cells.sort(key=lambda c: c.signs)
    if verbose:
        print(f"📊 排列: {len(hyperplanes)} 个超平面, {len(cells)} 个胞腔")
    return CellDecomposition(dim, tuple(hyperplanes), tuple(cells))


def cell_soundness(decomposition: CellDecomposition, forms: Iterable[AffineForm]) -> bool:
    """
    检查每个代表点上，各半空间的符号与符号向量所蕴含的一致

    form = c · h（c ≠ 0）时 sign(form) = sign(c) · sign(h)
    """
    forms = [f for f in forms if not f.is_trivial()]
    orientation = []
    for form in forms:
        index = decomposition.index_of(form)
        if index is None:
            return False
        h = decomposition.hyperplanes[index]
        k = next(j for j, a in enumerate(h.normal) if a != 0)
        orientation.append((index, sign_of(form.normal[k] / h.normal[k])))
    for cell in decomposition.cells:
        if decomposition.signs_at(cell.point) != cell.signs:
            return False
        for form, (index, c) in zip(forms, orientation):
            if sign_of(form.evaluate(cell.point)) != c * cell.signs[index]:
                return False
    return True
