"""
加权 Brianchon-Gram 分解、面展开、乘积恒等式与 Brion 拆分
"""

from itertools import combinations
from typing import Iterable, Optional, Tuple

import sympy

from gramcal.core import weights as wr
from gramcal.core.linalg import rank
from gramcal.errors import GenericityError, GeometryError, InputError
from gramcal.indicators.formal_sum import FormalSum, Term
from gramcal.indicators.weighted import WeightedPolyhedron, cone_body, face_body, flat_body
from gramcal.polyhedra.cones import tangent_cone
from gramcal.polyhedra.faces import Face, FaceLattice, Genericity, classify_genericity, enumerate_faces
from gramcal.polyhedra.polyhedron import is_bounded


def _lattice(wp: WeightedPolyhedron, lattice: Optional[FaceLattice]) -> FaceLattice:
    return lattice if lattice is not None else enumerate_faces(wp.polyhedron)


def require_simple(wp: WeightedPolyhedron, lattice: FaceLattice) -> None:
    report = classify_genericity(wp.polyhedron, lattice)
    if not report.is_simple:
        raise GenericityError(f"需要简单多面体，当前类别: {report.kind.value}")


def cone_label(face: Face) -> str:
    return f"C[{face.label()}]"


def brianchon_gram(wp: WeightedPolyhedron, lattice: Optional[FaceLattice] = None) -> FormalSum:
    """
    加权 Brianchon-Gram 分解：Σ_F (-1)^{dim F} 1^w_{C_F}

    Args:
        wp: 加权多胞形（简单，或只有顶点非一般）
        lattice: 预先算好的面格

    Returns:
        FormalSum，项按 (dim F, I_F) 排序，项数等于面数
    """
    lattice = _lattice(wp, lattice)
    report = classify_genericity(wp.polyhedron, lattice)
    if report.kind == Genericity.UNSUPPORTED:
        raise GenericityError("存在正维数的非一般面，不支持 Brianchon-Gram 分解")
    if not is_bounded(wp.polyhedron):
        raise GeometryError("Brianchon-Gram 分解需要有界多胞形")

    terms = []
    for face in lattice.faces:
        cone = tangent_cone(wp.polyhedron, face)
        terms.append(Term(wr.to_weight((-1) ** face.dim), cone_body(wp, cone), cone_label(face)))
    return FormalSum(wp.dim, tuple(terms))


def face_expansion(wp: WeightedPolyhedron, lattice: Optional[FaceLattice] = None) -> FormalSum:
    """
    按面展开：1_P + Σ_{F≠P} ∏_{i∈I_F}(q_i - 1) · 1_F

    对简单多面体（包括简单的锥）成立，所有项都是无权指示函数
    """
    lattice = _lattice(wp, lattice)
    require_simple(wp, lattice)

    terms = []
    for face in lattice.faces:
        if face.is_polyhedron_itself:
            terms.append(Term(wr.ONE, WeightedPolyhedron.unweighted(wp.polyhedron), "P"))
            continue
        coeff = wr.product(wp.weights[i] - 1 for i in face.active_set)
        terms.append(Term(wr.to_weight(coeff), face_body(wp.polyhedron, face), face.label()))
    return FormalSum(wp.dim, tuple(terms))


def product_expand(indices: Iterable[int]) -> Tuple[wr.Poly, wr.Poly]:
    """
    乘积恒等式 ∏ q_i = 1 + Σ_{∅≠J} ∏_{i∈J}(q_i - 1)

    Args:
        indices: 面编号（q 的下标，从 1 开始）

    Returns:
        (lhs, rhs)；rhs 不合并同类项，每个子集对应一个加项
    """
    indices = sorted(set(indices))
    if not indices:
        raise InputError("product_expand 至少需要一个下标")
    symbols = [wr.indeterminate(f"q{i}") for i in indices]
    lhs = wr.product(symbols)
    parts = [wr.ONE]
    for size in range(1, len(symbols) + 1):
        for subset in combinations(symbols, size):
            parts.append(sympy.Mul(*(s - 1 for s in subset), evaluate=False))
    rhs = sympy.Add(*parts, evaluate=False)
    return lhs, rhs


def body_lineality(body: WeightedPolyhedron) -> int:
    """d - rank{法向量}，R^d 为 d"""
    normals = [form.normal for form in body.halfspaces]
    return body.dim - rank(normals)


def brion_split(bg: FormalSum) -> Tuple[FormalSum, FormalSum]:
    """
    Brion 拆分

    Args:
        bg: brianchon_gram 的输出

    Returns:
        (g, vertex_part)：g 中每项都含直线，vertex_part 是所有顶点锥
    """
    g, vertex_part = [], []
    for term in bg.terms:
        (g if body_lineality(term.body) > 0 else vertex_part).append(term)
    return FormalSum(bg.dim, tuple(g)), FormalSum(bg.dim, tuple(vertex_part))


def bg_via_faces(wp: WeightedPolyhedron, lattice: Optional[FaceLattice] = None) -> FormalSum:
    """
    先按面展开，再对每个面用普通 Brianchon-Gram：

    Σ_F (-1)^{dim F} 1_{C_F} + Σ_{F≠P} ∏_{i∈I_F}(q_i - 1) Σ_{G⪯F} (-1)^{dim G} 1_{C_G F}

    C_G F 是 F 在 G 处的切锥（落在 aff F 内）
    """
    lattice = _lattice(wp, lattice)
    require_simple(wp, lattice)
    P = wp.polyhedron

    terms = []
    for face in lattice.faces:
        cone = tangent_cone(P, face)
        terms.append(Term(
            wr.to_weight((-1) ** face.dim),
            WeightedPolyhedron.unweighted(cone.polyhedron),
            cone_label(face),
        ))
    for face in lattice.faces:
        if face.is_polyhedron_itself:
            continue
        coeff = wr.product(wp.weights[i] - 1 for i in face.active_set)
        own = set(face.active_set)
        for sub in lattice.faces:
            if not own <= set(sub.active_set):
                continue
            body = flat_body(
                P.dim,
                (P.halfspaces[i] for i in face.active_set),
                (P.halfspaces[i] for i in sub.active_set if i not in own),
            )
            terms.append(Term(
                wr.to_weight(coeff * (-1) ** sub.dim), body, f"{face.label()}:{cone_label(sub)}",
            ))
    return FormalSum(wp.dim, tuple(terms))


def cone_face_expansion(wp: WeightedPolyhedron, face: Face) -> FormalSum:
    """切锥 C_F 自身的面展开（C_F 的权重继承自 P，面格按子集闭包枚举）"""
    cone = tangent_cone(wp.polyhedron, face)
    return face_expansion(cone_body(wp, cone))
