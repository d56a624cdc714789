"""
极分解：按 ξ 取最小值的顶点给面分组，每组等于一个翻转锥

约定：<ξ, e> > 0 的棱被翻转，极化后的锥全部指向 ξ 递减方向
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import sympy

from gramcal.core import weights as wr
from gramcal.core.linalg import SolutionKind, solve_affine
from gramcal.core.rational import AffineForm, Point, dot, format_rational, to_point, vec_sub
from gramcal.errors import GenericityError, InputError, PolarizationError
from gramcal.indicators.formal_sum import FormalSum, Term
from gramcal.indicators.weighted import WeightAssignment, WeightedPolyhedron, cone_body
from gramcal.polyhedra.cones import TangentCone, tangent_cone
from gramcal.polyhedra.faces import Face, FaceLattice, Vertex, enumerate_faces
from gramcal.polyhedra.polyhedron import HPolyhedron
from gramcal.decomp.brianchon_gram import cone_label, require_simple

VertexLike = Union[Vertex, Sequence[Fraction]]


@dataclass(frozen=True)
class PolarizedCone:
    """
    顶点 v 处的极化锥 C♯_v

    edges[k] 是离开面 cone.facet_ids[k] 的棱方向（落在其余面上）
    """

    vertex: Vertex
    cone: TangentCone
    edges: Tuple[Point, ...]
    flipped: Tuple[int, ...]
    body: WeightedPolyhedron

    @property
    def flip_count(self) -> int:
        return len(self.flipped)

    @property
    def sign(self) -> int:
        return -1 if self.flip_count % 2 else 1

    def term(self) -> Term:
        label = "C#[" + ",".join(format_rational(a) for a in self.vertex.point) + "]"
        return Term(wr.to_weight(self.sign), self.body, label)

    def to_dict(self) -> dict:
        return {
            'vertex': [format_rational(a) for a in self.vertex.point],
            'flip_count': self.flip_count,
            'flipped_facets': list(self.flipped),
            'sign': self.sign,
        }


def _check_xi(xi: Sequence, dim: int) -> Point:
    xi = to_point(xi)
    if len(xi) != dim:
        raise InputError(f"ξ 的维数 {len(xi)} 与多面体维数 {dim} 不一致")
    return xi


def is_polarizing(xi: Sequence, lattice: FaceLattice) -> bool:
    """ξ 在每条棱上都不是常数"""
    xi = _check_xi(xi, lattice.dim)
    for edge in lattice.edges():
        a, b = edge.vertices[0], edge.vertices[-1]
        if dot(xi, vec_sub(a, b)) == 0:
            return False
    return True


def sample_polarizing(wp: WeightedPolyhedron, lattice: Optional[FaceLattice] = None) -> Point:
    """
    确定性搜索 ξ = (1, M, M^2, ..., M^{d-1})，M = 2, 3, 5, ...

    坏的 M 只有有限个（每条棱给出一个多项式方程），一定终止
    """
    lattice = lattice if lattice is not None else enumerate_faces(wp.polyhedron)
    M = 2
    while True:
        xi = tuple(Fraction(M) ** k for k in range(wp.dim))
        if is_polarizing(xi, lattice):
            return xi
        M = int(sympy.nextprime(M))


def _resolve_vertex(lattice: FaceLattice, v: VertexLike) -> Vertex:
    if isinstance(v, Vertex):
        return v
    return lattice.vertex_at(to_point(v))


def _prepare(wp: WeightedPolyhedron, xi: Sequence, lattice: Optional[FaceLattice]):
    lattice = lattice if lattice is not None else enumerate_faces(wp.polyhedron)
    require_simple(wp, lattice)
    xi = _check_xi(xi, wp.dim)
    if not is_polarizing(xi, lattice):
        raise PolarizationError(
            f"ξ = ({', '.join(format_rational(a) for a in xi)}) 在某条棱上为常数，不是极化向量"
        )
    return lattice, xi


def polar_group(lattice: FaceLattice, vertex: Vertex, xi: Point) -> List[Face]:
    """包含 v 且 ξ 在其上的最小值于 v 处取得的面"""
    value = dot(xi, vertex.point)
    return [
        face for face in lattice.faces_containing(vertex)
        if all(dot(xi, u) >= value for u in face.vertices)
    ]


def polar_group_sum(wp: WeightedPolyhedron, v: VertexLike, xi: Sequence,
                    lattice: Optional[FaceLattice] = None) -> FormalSum:
    """
    顶点 v 的分组和 Σ_{F ∈ group(v)} (-1)^{dim F} 1^w_{C_F}

    Args:
        wp: 简单加权多胞形
        v: 顶点（Vertex 或坐标）
        xi: 极化向量

    Returns:
        FormalSum
    """
    lattice, xi = _prepare(wp, xi, lattice)
    vertex = _resolve_vertex(lattice, v)
    terms = [
        Term(wr.to_weight((-1) ** face.dim), cone_body(wp, tangent_cone(wp.polyhedron, face)),
             cone_label(face))
        for face in polar_group(lattice, vertex, xi)
    ]
    return FormalSum(wp.dim, tuple(terms))


def edge_directions(wp: WeightedPolyhedron, vertex: Vertex) -> Tuple[Point, ...]:
    """
    简单顶点锥的棱方向

    第 k 条棱落在除 facet_ids[k] 以外的所有面上，并指向该面的内侧
    """
    d = wp.dim
    active = vertex.active_set
    if len(active) != d:
        raise GenericityError(f"顶点 {[format_rational(a) for a in vertex.point]} 不是简单顶点")
    edges = []
    for j in active:
        equations = [AffineForm(wp.halfspaces[i].normal, Fraction(0)) for i in active if i != j]
        solution = solve_affine(equations, d)
        if solution.kind == SolutionKind.UNIQUE or solution.dim != 1:
            raise GenericityError("顶点锥的法向量线性相关")
        e = solution.directions[0]
        if dot(wp.halfspaces[j].normal, e) < 0:
            e = tuple(-a for a in e)
        edges.append(e)
    return tuple(edges)


def polarize_vertex_cone(wp: WeightedPolyhedron, v: VertexLike, xi: Sequence,
                         lattice: Optional[FaceLattice] = None) -> PolarizedCone:
    """
    翻转 v 处切锥中 ξ 递增的棱

    翻转棱 e_k 对应的面 op(k) 取反向半空间、权重 1 - q；其余面保持 q；
    符号为 (-1)^{#v}
    """
    lattice, xi = _prepare(wp, xi, lattice)
    vertex = _resolve_vertex(lattice, v)
    face = lattice.face_of(vertex.active_set)
    cone = tangent_cone(wp.polyhedron, face)
    edges = edge_directions(wp, vertex)

    forms, weights, flipped = [], [], []
    for facet, e in zip(cone.facet_ids, edges):
        form, q = wp.halfspaces[facet], wp.weights[facet]
        if dot(xi, e) > 0:
            flipped.append(facet)
            forms.append(-form)
            weights.append(wr.to_weight(1 - q))
        else:
            forms.append(form)
            weights.append(q)

    body = WeightedPolyhedron(
        HPolyhedron(wp.dim, tuple(forms)),
        WeightAssignment(tuple(weights)),
    )
    return PolarizedCone(vertex, cone, edges, tuple(flipped), body)


def polar_decompose(wp: WeightedPolyhedron, xi: Optional[Sequence] = None,
                    lattice: Optional[FaceLattice] = None) -> List[PolarizedCone]:
    """
    每个顶点一个极化锥，按顶点坐标排序

    xi 省略时用 sample_polarizing 自动选取
    """
    lattice = lattice if lattice is not None else enumerate_faces(wp.polyhedron)
    if xi is None:
        xi = sample_polarizing(wp, lattice)
    return [polarize_vertex_cone(wp, v, xi, lattice) for v in lattice.vertices]


def polar_sum(cones: Sequence[PolarizedCone], dim: int) -> FormalSum:
    """Σ_v (-1)^{#v} 1^{w_v}_{C♯_v}"""
    return FormalSum(dim, tuple(c.term() for c in cones))
