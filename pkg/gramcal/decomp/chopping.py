"""
非简单顶点的截顶流程

每个非简单顶点 v 用超平面 σ_v 截去，得到简单多胞形 P_s（新面权重为 1），
再通过五个恒等式把 Brianchon-Gram 从 P_s 转移回 P
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from gramcal.config import GramcalConfig
from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm, Point, dot, format_rational
from gramcal.decomp.brianchon_gram import brianchon_gram, cone_label
from gramcal.errors import ChopError, GenericityError
from gramcal.indicators.formal_sum import FormalSum, Term
from gramcal.indicators.weighted import WeightAssignment, WeightedPolyhedron, cone_body
from gramcal.polyhedra.cones import tangent_cone
from gramcal.polyhedra.faces import (
    FaceLattice,
    Genericity,
    Vertex,
    classify_genericity,
    enumerate_faces,
)
from gramcal.polyhedra.polyhedron import HPolyhedron, irredundant_indices


@dataclass(frozen=True)
class VertexChop:
    """单个非简单顶点的截平面 σ_v：H_v = {η(x) >= c}，v 不在 H_v 中"""

    vertex: Vertex
    eta: Point
    threshold: Fraction

    @property
    def halfspace(self) -> AffineForm:
        return AffineForm(self.eta, -self.threshold)

    def to_dict(self) -> dict:
        return {
            'vertex': [format_rational(a) for a in self.vertex.point],
            'eta': [format_rational(a) for a in self.eta],
            'threshold': format_rational(self.threshold),
        }


@dataclass(frozen=True)
class ChopData:
    """截顶结果；简单输入时 chops 为空且 chopped 就是原多胞形"""

    original: WeightedPolyhedron
    chops: Tuple[VertexChop, ...]
    chopped: WeightedPolyhedron
    cut_facets: Dict[Tuple[Fraction, ...], int] = field(default_factory=dict)
    attempts: int = 0

    @property
    def is_trivial(self) -> bool:
        return not self.chops

    def cut_index(self, chop: VertexChop) -> int:
        """σ_v 在 P_s 中的面下标"""
        return self.cut_facets[chop.vertex.point]

    def to_dict(self) -> dict:
        return {
            'attempts': self.attempts,
            'chops': [c.to_dict() for c in self.chops],
            'chopped_facets': self.chopped.polyhedron.n_facets,
        }


def _chop_forms(vertex: Vertex, polyhedron: HPolyhedron, vertices, attempt: int,
                rng: np.random.Generator) -> VertexChop:
    """η_v = Σ c_i u_i（c_i > 0），阈值 η(v) + gap / 2^{attempt+1}"""
    d = polyhedron.dim
    coefficients = [Fraction(1)] * len(vertex.active_set)
    if attempt > 0:
        delta = Fraction(1, 2 ** attempt)
        noise = rng.integers(1, 10, size=len(coefficients))
        coefficients = [1 + delta * Fraction(int(r), 10) for r in noise]

    eta = [Fraction(0)] * d
    for c, i in zip(coefficients, vertex.active_set):
        eta = [a + c * b for a, b in zip(eta, polyhedron.halfspaces[i].normal)]
    eta = tuple(eta)

    base = dot(eta, vertex.point)
    gap = min(dot(eta, u.point) - base for u in vertices if u.point != vertex.point)
    epsilon = gap / 2 ** (attempt + 1)
    return VertexChop(vertex, eta, base + epsilon)


def chop_nonsimple(wp: WeightedPolyhedron, lattice: Optional[FaceLattice] = None,
                   max_retries: Optional[int] = None, seed: Optional[int] = None,
                   verbose: Optional[bool] = None) -> ChopData:
    """
    截去所有非简单顶点

    Args:
        wp: 加权多胞形（类别须为 simple 或 nonsimple-vertices-only）
        lattice: 面格
        max_retries: 最大尝试次数，默认 GramcalConfig.CHOP_MAX_RETRIES
        seed: 扰动随机种子，默认 GramcalConfig.SEED
        verbose: 打印每次尝试

    Returns:
        ChopData

    Raises:
        GenericityError: 类别不受支持
        ChopError: 重试耗尽
    """
    max_retries = GramcalConfig.CHOP_MAX_RETRIES if max_retries is None else max_retries
    seed = GramcalConfig.SEED if seed is None else seed
    verbose = GramcalConfig.VERBOSE if verbose is None else verbose

    P = wp.polyhedron
    lattice = lattice if lattice is not None else enumerate_faces(P)
    report = classify_genericity(P, lattice)
    if report.kind == Genericity.UNSUPPORTED:
        raise GenericityError("存在正维数的非一般面，无法通过截顶得到简单多胞形")
    if report.is_simple:
        return ChopData(wp, (), wp)

    rng = np.random.default_rng(seed)
    diagnostics: List[str] = []
    for attempt in range(max_retries):
        chops = tuple(
            _chop_forms(v, P, lattice.vertices, attempt, rng) for v in report.nonsimple_vertices
        )
        forms = list(P.halfspaces) + [c.halfspace for c in chops]
        weights = list(wp.weights.weights) + [wr.ONE] * len(chops)
        kept = irredundant_indices(forms, P.dim)
        chopped = WeightedPolyhedron(
            HPolyhedron(P.dim, tuple(forms[i] for i in kept)),
            WeightAssignment(tuple(weights[i] for i in kept)),
        )
        position = {original: new for new, original in enumerate(kept)}
        cut_facets = {
            c.vertex.point: position[P.n_facets + k]
            for k, c in enumerate(chops) if P.n_facets + k in position
        }

        problem = _chop_problem(chopped, chops, cut_facets)
        if problem is None:
            if verbose:
                print(f"✅ 截顶成功（第 {attempt + 1} 次尝试）: {len(chops)} 个非简单顶点")
            return ChopData(wp, chops, chopped, cut_facets, attempt + 1)
        diagnostics.append(f"尝试 {attempt + 1}: {problem}")
        if verbose:
            print(f"⚠️  截顶尝试 {attempt + 1} 失败: {problem}")

    raise ChopError(f"截顶在 {max_retries} 次尝试后仍未得到简单多胞形", diagnostics)


def _chop_problem(chopped: WeightedPolyhedron, chops, cut_facets) -> Optional[str]:
    """返回不合格原因；合格返回 None"""
    if len(cut_facets) != len(chops):
        return "某个截平面是冗余的"
    lattice = enumerate_faces(chopped.polyhedron)
    report = classify_genericity(chopped.polyhedron, lattice)
    if not report.is_simple:
        return f"P_s 不是简单多胞形（{report.kind.value}）"
    cut_ids = set(cut_facets.values())
    for v in lattice.vertices:
        if len(cut_ids & set(v.active_set)) > 1:
            return f"顶点 {[format_rational(a) for a in v.point]} 落在多个截平面上"
    return None


@dataclass(frozen=True)
class NonSimpleWitness:
    """
    截顶恒等式所需的形式和

    bg_chopped = Σ_{F_s} (-1)^{dim F_s} 1^w_{C_{F_s}}
    f_p = Σ_F (-1)^{dim F} 1^w_{C_F}（P 的全部面）
    key_difference = 1^w_{P_s} - f_P
    cut_terms = Σ_v (Σ_{F_s ⊂ σ_v} (-1)^{dim F_s} 1^w_{C_{F_s}} - 1^w_{C_v})
    correction = Σ_v (1^w_{C_v} - 1^w_{C_v ∩ H_v})，即 Σ_v 1^w_{C_v \\ H_v}
    """

    chop: ChopData
    bg_chopped: FormalSum
    f_p: FormalSum
    key_difference: FormalSum
    cut_terms: FormalSum
    correction: FormalSum
    chopped_indicator: FormalSum
    indicator: FormalSum

    def checks(self) -> List[Tuple[str, FormalSum, FormalSum]]:
        """(名字, 左边, 右边)，五个恒等式"""
        return [
            ('chopped_bg', self.bg_chopped, self.chopped_indicator),
            ('key_difference', self.key_difference, self.cut_terms),
            ('correction', self.key_difference, -self.correction),
            ('truncation', self.chopped_indicator - self.indicator, -self.correction),
            ('conclusion', self.f_p, self.indicator),
        ]

    def hyperplanes(self) -> List[AffineForm]:
        forms: List[AffineForm] = []
        for _, lhs, rhs in self.checks():
            forms.extend(lhs.hyperplanes())
            forms.extend(rhs.hyperplanes())
        return forms


def nonsimple_bg_witness(wp: WeightedPolyhedron, chop: ChopData,
                         lattice: Optional[FaceLattice] = None) -> NonSimpleWitness:
    """
    构造截顶流程的全部形式和（相等性交给 verify 模块判定）

    Args:
        wp: 原多胞形 P
        chop: chop_nonsimple 的结果

    Returns:
        NonSimpleWitness
    """
    P = wp.polyhedron
    lattice = lattice if lattice is not None else enumerate_faces(P)
    chopped_lattice = enumerate_faces(chop.chopped.polyhedron)

    bg_chopped = brianchon_gram(chop.chopped, chopped_lattice)
    f_p = brianchon_gram(wp, lattice)
    chopped_indicator = FormalSum.single(chop.chopped, label="P_s")
    indicator = FormalSum.single(wp, label="P")
    key_difference = chopped_indicator - f_p

    cut_terms, correction = [], []
    for c in chop.chops:
        cut = chop.cut_index(c)
        for face in chopped_lattice.faces:
            if cut in face.active_set:
                cone = tangent_cone(chop.chopped.polyhedron, face)
                cut_terms.append(Term(
                    wr.to_weight((-1) ** face.dim), cone_body(chop.chopped, cone), cone_label(face),
                ))
        vertex_face = lattice.face_of(c.vertex.active_set)
        vertex_cone = cone_body(wp, tangent_cone(P, vertex_face))
        label = cone_label(vertex_face)
        cut_terms.append(Term(wr.to_weight(-1), vertex_cone, label))

        truncated = WeightedPolyhedron(
            vertex_cone.polyhedron.with_halfspaces([c.halfspace]),
            vertex_cone.weights.extended([1]),
        )
        correction.append(Term(wr.ONE, vertex_cone, label))
        correction.append(Term(wr.to_weight(-1), truncated, f"{label}∩H"))

    return NonSimpleWitness(
        chop=chop,
        bg_chopped=bg_chopped,
        f_p=f_p,
        key_difference=key_difference,
        cut_terms=FormalSum(wp.dim, tuple(cut_terms)),
        correction=FormalSum(wp.dim, tuple(correction)),
        chopped_indicator=chopped_indicator,
        indicator=indicator,
    )
