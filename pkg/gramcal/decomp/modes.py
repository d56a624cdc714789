"""
四种分解模式：bg, faces, brion, polar
"""

from typing import Optional

from gramcal.core.rational import format_rational, to_point
from gramcal.decomp.base import BaseDecomposition, DecompositionResult
from gramcal.decomp.brianchon_gram import (
    bg_via_faces,
    body_lineality,
    brianchon_gram,
    brion_split,
    face_expansion,
)
from gramcal.decomp.chopping import chop_nonsimple, nonsimple_bg_witness
from gramcal.decomp.polar import polar_decompose, polar_group, polar_group_sum, polar_sum, sample_polarizing
from gramcal.errors import InputError
from gramcal.indicators.formal_sum import FormalSum
from gramcal.indicators.weighted import WeightedPolyhedron
from gramcal.polyhedra.faces import FaceLattice, classify_genericity, enumerate_faces


def _setup(wp: WeightedPolyhedron, lattice: Optional[FaceLattice]):
    lattice = lattice if lattice is not None else enumerate_faces(wp.polyhedron)
    return lattice, classify_genericity(wp.polyhedron, lattice)


class BrianchonGramDecomposition(BaseDecomposition):
    """加权 Brianchon-Gram；只有顶点非一般时附带截顶流程的五个恒等式"""

    PARAMETERS = {
        'chop_max_retries': {
            'type': int,
            'default': None,
            'description': '截顶最大尝试次数（默认取配置）',
        },
        'seed': {
            'type': int,
            'default': None,
            'description': '截顶扰动随机种子（默认取配置）',
        },
    }

    def decompose(self, wp, lattice=None):
        lattice, report = _setup(wp, lattice)
        terms = brianchon_gram(wp, lattice)
        target = FormalSum.single(wp, label="P")
        result = DecompositionResult('bg', wp, lattice, report, terms, target)
        # 结论 f_P = 1^w_P 就是主恒等式
        result.checks.append(('main', terms, target))
        if report.is_simple:
            return result

        chop = chop_nonsimple(
            wp, lattice,
            max_retries=self.params['chop_max_retries'],
            seed=self.params['seed'],
        )
        witness = nonsimple_bg_witness(wp, chop, lattice)
        result.checks.extend(c for c in witness.checks() if c[0] != 'conclusion')
        result.details['chop'] = chop.to_dict()
        return result

    def get_description(self) -> str:
        return "加权 Brianchon-Gram: Σ_F (-1)^{dim F} 1^w_{C_F}"


class FaceExpansionDecomposition(BaseDecomposition):
    """按面展开，附带逐面 Brianchon-Gram 的中间恒等式"""

    PARAMETERS = {}

    def decompose(self, wp, lattice=None):
        lattice, report = _setup(wp, lattice)
        terms = face_expansion(wp, lattice)
        target = FormalSum.single(wp, label="P")
        result = DecompositionResult('faces', wp, lattice, report, terms, target)
        result.checks.append(('main', terms, target))
        result.checks.append(('bg_via_faces', bg_via_faces(wp, lattice), target))
        return result

    def get_description(self) -> str:
        return "按面展开: 1_P + Σ_{F≠P} ∏(q_i - 1) 1_F"


class BrionDecomposition(BaseDecomposition):
    """加权 Brion：g + Σ_v 1^w_{C_v}"""

    PARAMETERS = {}

    def decompose(self, wp, lattice=None):
        lattice, report = _setup(wp, lattice)
        g, vertex_part = brion_split(brianchon_gram(wp, lattice))
        terms = g + vertex_part
        target = FormalSum.single(wp, label="P")
        result = DecompositionResult('brion', wp, lattice, report, terms, target)
        result.checks.append(('main', terms, target))
        result.details['brion'] = {
            'g_terms': len(g),
            'vertex_terms': len(vertex_part),
            'g_contains_lines': all(body_lineality(t.body) > 0 for t in g.terms),
            'vertex_cones_pointed': all(body_lineality(t.body) == 0 for t in vertex_part.terms),
        }
        return result

    def get_description(self) -> str:
        return "加权 Brion: 含直线的锥 + 顶点锥"


class PolarDecomposition(BaseDecomposition):
    """极分解：每个顶点一个翻转锥，并逐顶点与分组和比对"""

    PARAMETERS = {
        'xi': {
            'type': tuple,
            'default': None,
            'description': '极化向量 ξ（省略时自动选取）',
        },
        'require_uniform': {
            'type': bool,
            'default': True,
            'description': '要求所有面权重是同一个不定元',
        },
    }

    def decompose(self, wp, lattice=None):
        if self.params['require_uniform'] and not wp.weights.is_uniform():
            raise InputError("polar 模式要求所有面权重是同一个不定元 q")
        lattice, report = _setup(wp, lattice)
        xi = self.params['xi']
        xi = sample_polarizing(wp, lattice) if xi is None else to_point(xi)
        cones = polar_decompose(wp, xi, lattice)
        terms = polar_sum(cones, wp.dim)
        target = FormalSum.single(wp, label="P")
        result = DecompositionResult('polar', wp, lattice, report, terms, target)
        result.checks.append(('main', terms, target))

        covered = []
        for cone in cones:
            group = polar_group_sum(wp, cone.vertex, xi, lattice)
            name = "group(" + ",".join(format_rational(a) for a in cone.vertex.point) + ")"
            result.checks.append((name, FormalSum(wp.dim, (cone.term(),)), group))
            covered.extend(f.active_set for f in polar_group(lattice, cone.vertex, xi))

        result.details['polar'] = {
            'xi': [format_rational(a) for a in xi],
            'cones': [c.to_dict() for c in cones],
            'groups_partition_faces': sorted(covered) == sorted(f.active_set for f in lattice.faces),
        }
        return result

    def get_description(self) -> str:
        return "极分解: Σ_v (-1)^{#v} 1^{w_v}_{C♯_v}"
