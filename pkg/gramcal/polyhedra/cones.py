"""
切锥、线性空间维数与相对内点
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from gramcal.core.fourier_motzkin import Constraint, fm_feasible
from gramcal.core.linalg import rank
from gramcal.core.rational import Point
from gramcal.errors import GeometryError
from gramcal.polyhedra.faces import Face
from gramcal.polyhedra.polyhedron import HPolyhedron


@dataclass(frozen=True)
class TangentCone:
    """
    切锥 C_F = {x : form_i(x) >= 0, i ∈ I_F}

    facet_ids 保留原多面体中的面下标，权重按下标继承
    """

    base_face: Face
    facet_ids: Tuple[int, ...]
    polyhedron: HPolyhedron

    @property
    def dim(self) -> int:
        return self.polyhedron.dim

    @property
    def is_whole_space(self) -> bool:
        return not self.facet_ids

    def contains(self, x: Sequence) -> bool:
        return self.polyhedron.contains(x)


def tangent_cone(polyhedron: HPolyhedron, face: Face) -> TangentCone:
    """
    P 在面 F 处的切锥（活跃约束表示）

    Args:
        polyhedron: 多面体 P
        face: P 的面

    Returns:
        TangentCone；F = P 时为 R^d（无约束）
    """
    ids = tuple(face.active_set)
    return TangentCone(face, ids, polyhedron.subsystem(ids))


def lineality_dim(cone: TangentCone) -> int:
    """d - rank{u_i : i ∈ I_F}；大于 0 当且仅当锥含直线"""
    normals = [form.normal for form in cone.polyhedron.halfspaces]
    return cone.dim - rank(normals)


def relative_interior_point(polyhedron: HPolyhedron, active: Iterable[int] = (),
                            extra: Sequence[Constraint] = ()) -> Point:
    """
    相对内点：active 中的约束取等，其余严格成立

    Args:
        polyhedron: 多面体（或面、胞腔所在的系统）
        active: 取等号的约束下标
        extra: 额外约束，例如截半空间

    Returns:
        精确见证点

    Raises:
        GeometryError: 相对内部为空
    """
    system = polyhedron.constraints(active=active, strict=True) + list(extra)
    result = fm_feasible(system, polyhedron.dim)
    if not result:
        raise GeometryError(f"相对内部为空（活跃集 {sorted(set(active))}）")
    return result.witness
