"""
H-表示多面体：P = H_1 ∩ ... ∩ H_N，H_i = {x | <u_i, x> + mu_i >= 0}
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from gramcal.core.fourier_motzkin import Relation, fm_feasible
from gramcal.core.rational import AffineForm, check_dimension
from gramcal.errors import GeometryError, InputError


@dataclass(frozen=True)
class HPolyhedron:
    """
    半空间交；halfspaces[i] 表示 form_i(x) >= 0

    直接构造不做任何检查（用于锥、面、截取窗口等辅助集合）；
    经过 build_polyhedron 的实例保证无冗余且满维。
    """

    dim: int
    halfspaces: Tuple[AffineForm, ...]

    @property
    def n_facets(self) -> int:
        return len(self.halfspaces)

    def slacks(self, x: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        return tuple(form.evaluate(x) for form in self.halfspaces)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(s >= 0 for s in self.slacks(x))

    def active_set(self, x: Sequence[Fraction]) -> FrozenSet[int]:
        """A(x) = {i : form_i(x) = 0}"""
        return frozenset(i for i, s in enumerate(self.slacks(x)) if s == 0)

    def with_halfspaces(self, extra: Iterable[AffineForm]) -> 'HPolyhedron':
        return HPolyhedron(self.dim, self.halfspaces + tuple(extra))

    def subsystem(self, indices: Iterable[int]) -> 'HPolyhedron':
        return HPolyhedron(self.dim, tuple(self.halfspaces[i] for i in indices))

    def constraints(self, active: Iterable[int] = (), strict: bool = False):
        """FM 约束：active 中的取等式，其余取 >= 或 >"""
        active = set(active)
        rest = Relation.GT if strict else Relation.GE
        return [
            (form, Relation.EQ if i in active else rest)
            for i, form in enumerate(self.halfspaces)
        ]


def irredundant_indices(forms: Sequence[AffineForm], dim: int) -> List[int]:
    """
    保留下来的半空间下标（保持原顺序）

    半空间 k 冗余当且仅当 {其余 >= 0, form_k < 0} 不可行；
    依次判定并立即删除，重复的半空间只保留第一个。

    Raises:
        GeometryError: 内部为空（不是满维）
    """
    check_dimension(forms, dim)
    if not fm_feasible([(f, Relation.GT) for f in forms], dim):
        raise GeometryError("多面体不是满维的（不存在严格满足所有约束的点）")

    kept = list(range(len(forms)))
    for k in range(len(forms)):
        others = [(forms[i], Relation.GE) for i in kept if i != k]
        if not fm_feasible(others + [(-forms[k], Relation.GT)], dim):
            kept.remove(k)
    return kept


def build_polyhedron(forms: Sequence[AffineForm], dim: int) -> HPolyhedron:
    """
    构造无冗余、满维的 H-多面体

    Args:
        forms: 仿射形式列表（form >= 0）
        dim: 环境维数

    Returns:
        HPolyhedron
    """
    if dim < 1 and not forms:
        raise InputError("至少需要一个半空间或 dim >= 1")
    kept = irredundant_indices(forms, dim)
    return HPolyhedron(dim, tuple(forms[i] for i in kept))


def is_bounded(polyhedron: HPolyhedron) -> bool:
    """有界当且仅当回收锥 {y : <u_i, y> >= 0} 只含零向量"""
    d = polyhedron.dim
    recession = [(AffineForm(f.normal, Fraction(0)), Relation.GE) for f in polyhedron.halfspaces]
    for j in range(d):
        for sign in (1, -1):
            axis = tuple(Fraction(sign if k == j else 0) for k in range(d))
            ray_check = (AffineForm(axis, Fraction(0)), Relation.GT)
            if fm_feasible(recession + [ray_check], d):
                return False
    return True
