"""
加权特征函数

1^w_P(x) = ∏_{i∈A(x)} q_i（x ∈ P），内部点为 1，P 外为 0
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Set, Tuple

from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm
from gramcal.errors import InputError
from gramcal.polyhedra.cones import TangentCone
from gramcal.polyhedra.faces import Face, FaceLattice
from gramcal.polyhedra.polyhedron import HPolyhedron, irredundant_indices


@dataclass(frozen=True)
class WeightAssignment:
    """面下标 -> 权重多项式，按多面体半空间顺序存放"""

    weights: Tuple[wr.Poly, ...]

    @classmethod
    def symbolic(cls, n: int) -> 'WeightAssignment':
        """q1, ..., qn"""
        return cls(tuple(wr.facet_indeterminate(i) for i in range(n)))

    @classmethod
    def uniform(cls, n: int, name: str = 'q') -> 'WeightAssignment':
        """所有面取同一个不定元"""
        symbol = wr.indeterminate(name)
        return cls(tuple(symbol for _ in range(n)))

    @classmethod
    def ones(cls, n: int) -> 'WeightAssignment':
        return cls(tuple(wr.ONE for _ in range(n)))

    @classmethod
    def of(cls, values: Iterable[wr.WeightLike]) -> 'WeightAssignment':
        return cls(tuple(wr.to_weight(v) for v in values))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> wr.Poly:
        return self.weights[index]

    def restrict(self, indices: Iterable[int]) -> 'WeightAssignment':
        return WeightAssignment(tuple(self.weights[i] for i in indices))

    def extended(self, extra: Iterable[wr.WeightLike]) -> 'WeightAssignment':
        return WeightAssignment(self.weights + tuple(wr.to_weight(v) for v in extra))

    def names(self) -> Set[str]:
        result: Set[str] = set()
        for w in self.weights:
            result |= wr.names_of(w)
        return result

    def is_uniform(self) -> bool:
        """全部权重相同且是单个不定元"""
        if not self.weights:
            return True
        first = self.weights[0]
        return first.is_Symbol and all(w == first for w in self.weights)

    def substitute(self, assignment: Mapping[str, wr.WeightLike]) -> 'WeightAssignment':
        """非严格代入，未知名字由调用方统一检查"""
        out = []
        for w in self.weights:
            value = wr.poly_substitute(w, assignment)
            out.append(wr.from_rational(value) if isinstance(value, Fraction) else value)
        return WeightAssignment(tuple(out))

    def labels(self) -> Tuple[str, ...]:
        return tuple(wr.format_poly(w) for w in self.weights)


@dataclass(frozen=True)
class WeightedPolyhedron:
    """多面体 + 面权重"""

    polyhedron: HPolyhedron
    weights: WeightAssignment

    def __post_init__(self):
        if len(self.weights) != self.polyhedron.n_facets:
            raise InputError(
                f"权重个数 {len(self.weights)} 与半空间个数 {self.polyhedron.n_facets} 不一致"
            )

    @classmethod
    def from_forms(cls, forms: Sequence[AffineForm], dim: int,
                   weights: Optional[Sequence[wr.WeightLike]] = None) -> 'WeightedPolyhedron':
        """
        构造无冗余的加权多面体

        Args:
            forms: 半空间
            dim: 维数
            weights: 与 forms 一一对应的权重，默认 q1..qN（按输入顺序编号）

        Returns:
            WeightedPolyhedron，冗余半空间连同其权重一起删除
        """
        if weights is None:
            assignment = WeightAssignment.symbolic(len(forms))
        else:
            if len(weights) != len(forms):
                raise InputError(f"权重个数 {len(weights)} 与半空间个数 {len(forms)} 不一致")
            assignment = WeightAssignment.of(weights)
        kept = irredundant_indices(forms, dim)
        polyhedron = HPolyhedron(dim, tuple(forms[i] for i in kept))
        return cls(polyhedron, assignment.restrict(kept))

    @classmethod
    def unweighted(cls, polyhedron: HPolyhedron) -> 'WeightedPolyhedron':
        return cls(polyhedron, WeightAssignment.ones(polyhedron.n_facets))

    @property
    def dim(self) -> int:
        return self.polyhedron.dim

    @property
    def halfspaces(self) -> Tuple[AffineForm, ...]:
        return self.polyhedron.halfspaces

    def weight_at(self, x: Sequence[Fraction]) -> wr.Poly:
        return weight_at(self, x)

    def substitute(self, assignment: Mapping[str, wr.WeightLike]) -> 'WeightedPolyhedron':
        return WeightedPolyhedron(self.polyhedron, self.weights.substitute(assignment))

    def with_uniform_weight(self, name: str = 'q') -> 'WeightedPolyhedron':
        return WeightedPolyhedron(self.polyhedron, WeightAssignment.uniform(self.polyhedron.n_facets, name))


def weight_at(wp: WeightedPolyhedron, x: Sequence[Fraction]) -> wr.Poly:
    """
    加权特征函数在 x 处的值

    Args:
        wp: 加权多面体
        x: 精确有理点

    Returns:
        违反任一约束为 0，否则为活跃约束权重之积（空积为 1）
    """
    value = wr.ONE
    for form, w in zip(wp.polyhedron.halfspaces, wp.weights.weights):
        s = form.evaluate(x)
        if s < 0:
            return wr.ZERO
        if s == 0:
            value = value * w
    return value


def uniform_weight(lattice: FaceLattice, polyhedron: HPolyhedron, q: wr.Poly,
                   x: Sequence[Fraction]) -> wr.Poly:
    """简单多面体、所有面权重为 q 时：1^q_P(x) = q^{codim F}，F 为包含 x 的最小面"""
    if not polyhedron.contains(x):
        return wr.ZERO
    face = lattice.face_of(polyhedron.active_set(x))
    return q ** (lattice.dim - face.dim)


def cone_body(wp: WeightedPolyhedron, cone: TangentCone) -> WeightedPolyhedron:
    """切锥带继承权重 {q_i : i ∈ I_F}"""
    return WeightedPolyhedron(cone.polyhedron, wp.weights.restrict(cone.facet_ids))


def flat_body(dim: int, equalities: Iterable[AffineForm],
              inequalities: Iterable[AffineForm]) -> WeightedPolyhedron:
    """
    低维集合 {e = 0, g >= 0} 的无权指示函数

    等式写成一对相反的半空间，所有权重为 1
    """
    forms = list(inequalities)
    for e in equalities:
        forms.append(e)
        forms.append(-e)
    return WeightedPolyhedron.unweighted(HPolyhedron(dim, tuple(forms)))


def face_body(polyhedron: HPolyhedron, face: Face) -> WeightedPolyhedron:
    """面 F 的无权指示函数 1_F"""
    return flat_body(
        polyhedron.dim,
        (polyhedron.halfspaces[i] for i in face.active_set),
        polyhedron.halfspaces,
    )
