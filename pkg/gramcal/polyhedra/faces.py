"""
顶点枚举、面格（带活跃面集 I_F）与一般性分类
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from gramcal.config import GramcalConfig
from gramcal.core.fourier_motzkin import Relation, fm_feasible
from gramcal.core.linalg import SolutionKind, SolutionSet, rank, solve_affine
from gramcal.core.rational import Point, format_rational
from gramcal.errors import GeometryError
from gramcal.polyhedra.polyhedron import HPolyhedron, is_bounded


@dataclass(frozen=True)
class Vertex:
    """顶点及其完整活跃面集 I_v"""

    point: Point
    active_set: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            'point': [format_rational(a) for a in self.point],
            'active_set': list(self.active_set),
        }


@dataclass(frozen=True)
class Face:
    """面 F = P ∩ ⋂_{i∈I_F} σ_i，active_set 是包含 F 的全部面的下标"""

    active_set: Tuple[int, ...]
    dim: int
    affine_basis: SolutionSet
    vertices: Tuple[Point, ...] = field(default_factory=tuple)

    @property
    def is_polyhedron_itself(self) -> bool:
        return not self.active_set

    @property
    def is_vertex(self) -> bool:
        return self.dim == 0

    def is_generic(self, ambient_dim: int) -> bool:
        """|I_F| = d - dim F"""
        return len(self.active_set) == ambient_dim - self.dim

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.dim, self.active_set)

    def contains_face(self, other: 'Face') -> bool:
        """other ⪯ self 当且仅当 I_self ⊆ I_other"""
        return set(self.active_set) <= set(other.active_set)

    def label(self) -> str:
        if self.is_polyhedron_itself:
            return "P"
        ids = ",".join(str(i + 1) for i in self.active_set)
        return f"F{{{ids}}}"


@dataclass(frozen=True)
class FaceLattice:
    """全部非空面（含 P 本身），按 (dim, I_F) 排序"""

    dim: int
    faces: Tuple[Face, ...]
    vertices: Tuple[Vertex, ...]

    def by_dim(self, k: int) -> List[Face]:
        return [f for f in self.faces if f.dim == k]

    def edges(self) -> List[Face]:
        return self.by_dim(1)

    def face_of(self, active: Sequence[int]) -> Optional[Face]:
        key = tuple(sorted(active))
        return next((f for f in self.faces if f.active_set == key), None)

    def faces_containing(self, vertex: Vertex) -> List[Face]:
        """包含顶点 v 的面：I_F ⊆ I_v"""
        active = set(vertex.active_set)
        return [f for f in self.faces if set(f.active_set) <= active]

    def vertex_at(self, point: Sequence[Fraction]) -> Vertex:
        point = tuple(point)
        for v in self.vertices:
            if v.point == point:
                return v
        raise GeometryError(f"{[format_rational(a) for a in point]} 不是顶点")

    def euler_sum(self) -> int:
        """Σ_F (-1)^{dim F}，多胞形应为 1"""
        return sum((-1) ** f.dim for f in self.faces)

    def counts(self) -> Dict[int, int]:
        result: Dict[int, int] = {}
        for f in self.faces:
            result[f.dim] = result.get(f.dim, 0) + 1
        return result


class Genericity(Enum):
    """一般性类别"""
    SIMPLE = "simple"
    NONSIMPLE_VERTICES_ONLY = "nonsimple-vertices-only"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class GenericityReport:
    kind: Genericity
    nonsimple_vertices: Tuple[Vertex, ...] = field(default_factory=tuple)

    @property
    def is_simple(self) -> bool:
        return self.kind == Genericity.SIMPLE

    def to_dict(self) -> dict:
        return {
            'class': self.kind.value,
            'nonsimple_vertices': [v.to_dict() for v in self.nonsimple_vertices],
        }


def enumerate_vertices(polyhedron: HPolyhedron) -> Tuple[Vertex, ...]:
    """
    枚举顶点

    每个 d 元面超平面子集若有唯一交点且在 P 内，即得到一个顶点；
    重合的交点合并（非简单顶点会被多个子集命中），活跃面集从头计算。
    对未经 build_polyhedron 的系统（如截取窗口）同样适用。
    """
    d = polyhedron.dim
    found: Dict[Point, Tuple[int, ...]] = {}
    for subset in combinations(range(polyhedron.n_facets), d):
        solution = solve_affine([polyhedron.halfspaces[i] for i in subset], d)
        if solution.kind != SolutionKind.UNIQUE:
            continue
        point = solution.point
        if point in found or not polyhedron.contains(point):
            continue
        found[point] = tuple(sorted(polyhedron.active_set(point)))
    return tuple(Vertex(p, a) for p, a in sorted(found.items()))


def _face_from_active(polyhedron: HPolyhedron, active: Tuple[int, ...],
                      vertices: Sequence[Vertex]) -> Face:
    d = polyhedron.dim
    normals = [polyhedron.halfspaces[i].normal for i in active]
    face_dim = d - rank(normals)
    basis = solve_affine([polyhedron.halfspaces[i] for i in active], d)
    members = tuple(v.point for v in vertices if set(active) <= set(v.active_set))
    return Face(active, face_dim, basis, members)


def _closed_sets_from_vertices(vertices: Sequence[Vertex]) -> List[FrozenSet[int]]:
    """所有顶点活跃集的交（不断两两求交直到不动点）"""
    closed = {frozenset(v.active_set) for v in vertices}
    frontier = set(closed)
    while frontier:
        new = set()
        for a in frontier:
            for b in closed:
                c = a & b
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    closed.add(frozenset())
    return list(closed)


def _closed_sets_from_subsets(polyhedron: HPolyhedron) -> List[FrozenSet[int]]:
    """
    子集闭包：对每个 |S| <= d 的面子集求 P ∩ ⋂_S σ_i 的完整活跃集

    每个面都由 codim F 个线性无关的面超平面切出，所以只需 |S| <= d
    """
    d, n = polyhedron.dim, polyhedron.n_facets
    closed = set()
    for size in range(0, min(d, n) + 1):
        for subset in combinations(range(n), size):
            base = polyhedron.constraints(active=subset)
            if not fm_feasible(base, d):
                continue
            closure = set(subset)
            for j in range(n):
                if j in closure:
                    continue
                extended = base + [(polyhedron.halfspaces[j], Relation.GT)]
                if not fm_feasible(extended, d):
                    closure.add(j)
            closed.add(frozenset(closure))
    return list(closed)


def enumerate_faces(polyhedron: HPolyhedron, max_facets: Optional[int] = None) -> FaceLattice:
    """
    枚举全部非空面（含 P 本身，I_P = ∅）

    多胞形用顶点活跃集的交得到全部闭活跃集；无界多面体（锥）用子集闭包。

    Args:
        polyhedron: 多面体
        max_facets: 面数上限，默认 GramcalConfig.MAX_FACETS

    Returns:
        FaceLattice
    """
    cap = GramcalConfig.MAX_FACETS if max_facets is None else max_facets
    if polyhedron.n_facets > cap:
        raise GeometryError(f"面数 {polyhedron.n_facets} 超过上限 {cap}（面格枚举为指数复杂度）")

    vertices = enumerate_vertices(polyhedron)
    if vertices and is_bounded(polyhedron):
        closed_sets = _closed_sets_from_vertices(vertices)
    else:
        closed_sets = _closed_sets_from_subsets(polyhedron)

    faces = [_face_from_active(polyhedron, tuple(sorted(s)), vertices) for s in closed_sets]
    faces.sort(key=lambda f: f.sort_key)
    return FaceLattice(polyhedron.dim, tuple(faces), vertices)


def classify_genericity(polyhedron: HPolyhedron,
                        lattice: Optional[FaceLattice] = None) -> GenericityReport:
    """
    一般性分类

    simple：所有面都是一般的；nonsimple-vertices-only：非一般面全是顶点；其余 unsupported
    """
    if lattice is None:
        lattice = enumerate_faces(polyhedron)
    d = polyhedron.dim
    bad = [f for f in lattice.faces if not f.is_generic(d)]
    if not bad:
        return GenericityReport(Genericity.SIMPLE)
    if all(f.is_vertex for f in bad):
        points = {f.vertices[0] for f in bad}
        nonsimple = tuple(v for v in lattice.vertices if v.point in points)
        return GenericityReport(Genericity.NONSIMPLE_VERTICES_ONLY, nonsimple)
    return GenericityReport(Genericity.UNSUPPORTED)


def smallest_face_containing(lattice: FaceLattice, polyhedron: HPolyhedron,
                             x: Sequence[Fraction]) -> Optional[Face]:
    """包含 x 的最小面，其活跃集就是 A(x)；x 不在 P 中返回 None"""
    if not polyhedron.contains(x):
        return None
    return lattice.face_of(polyhedron.active_set(x))
