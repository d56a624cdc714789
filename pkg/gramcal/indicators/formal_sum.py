"""
形式和：加权指示函数的有限线性组合（K(R^n) 中的元素）

加法与取负只是拼接项表，不做任何几何化简；相等性由 verify 模块判定
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Mapping, Sequence, Set, Tuple

from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm
from gramcal.errors import InputError
from gramcal.indicators.weighted import WeightedPolyhedron, weight_at


@dataclass(frozen=True)
class Term:
    """coeff · 1^w_body"""

    coeff: wr.Poly
    body: WeightedPolyhedron
    label: str = ""

    def scaled(self, factor: wr.Poly) -> 'Term':
        return Term(wr.to_weight(self.coeff * factor), self.body, self.label)


@dataclass(frozen=True)
class FormalSum:
    """Σ coeff_k · 1^{w_k}_{body_k}"""

    dim: int
    terms: Tuple[Term, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for term in self.terms:
            if term.body.dim != self.dim:
                raise InputError(f"项的维数 {term.body.dim} 与形式和维数 {self.dim} 不一致")

    @classmethod
    def zero(cls, dim: int) -> 'FormalSum':
        return cls(dim, ())

    @classmethod
    def single(cls, body: WeightedPolyhedron, coeff: wr.WeightLike = 1, label: str = "") -> 'FormalSum':
        return cls(body.dim, (Term(wr.to_weight(coeff), body, label),))

    @classmethod
    def of_terms(cls, dim: int, terms: Iterable[Term]) -> 'FormalSum':
        return cls(dim, tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def _check(self, other: 'FormalSum') -> None:
        if other.dim != self.dim:
            raise InputError(f"形式和维数不一致: {self.dim} vs {other.dim}")

    def __add__(self, other: 'FormalSum') -> 'FormalSum':
        self._check(other)
        return FormalSum(self.dim, self.terms + other.terms)

    def __neg__(self) -> 'FormalSum':
        return self.scaled(-1)

    def __sub__(self, other: 'FormalSum') -> 'FormalSum':
        return self + (-other)

    def scaled(self, factor: wr.WeightLike) -> 'FormalSum':
        factor = wr.to_weight(factor)
        return FormalSum(self.dim, tuple(t.scaled(factor) for t in self.terms))

    def hyperplanes(self) -> List[AffineForm]:
        """所有项涉及的半空间（未去重）"""
        return [form for t in self.terms for form in t.body.halfspaces]

    def names(self) -> Set[str]:
        """出现的全部不定元"""
        result: Set[str] = set()
        for t in self.terms:
            result |= wr.names_of(t.coeff)
            result |= t.body.weights.names()
        return result

    def evaluate(self, x: Sequence[Fraction]) -> wr.Poly:
        return fs_evaluate(self, x)

    def substitute(self, assignment: Mapping[str, wr.WeightLike]) -> 'FormalSum':
        return fs_substitute(self, assignment)


def fs_evaluate(s: FormalSum, x: Sequence[Fraction]) -> wr.Poly:
    """
    形式和在 x 处的值

    Args:
        s: 形式和
        x: 精确有理点（维数须一致）

    Returns:
        Σ coeff_k · weight_k(x)，展开后的多项式
    """
    if len(x) != s.dim:
        raise InputError(f"点的维数 {len(x)} 与形式和维数 {s.dim} 不一致")
    parts = [t.coeff * weight_at(t.body, x) for t in s.terms]
    return wr.to_weight(sum(parts, wr.ZERO))


def fs_substitute(s: FormalSum, assignment: Mapping[str, wr.WeightLike]) -> FormalSum:
    """
    对每个系数和每个面权重做代入

    Raises:
        InputError: 名字在整个形式和中都没有出现
    """
    known = s.names()
    for name in assignment:
        if str(name) not in known:
            raise InputError(f"未知的不定元: {name}")
    terms = []
    for t in s.terms:
        coeff = wr.poly_substitute(t.coeff, assignment)
        if isinstance(coeff, Fraction):
            coeff = wr.from_rational(coeff)
        terms.append(Term(coeff, t.body.substitute(assignment), t.label))
    return FormalSum(s.dim, tuple(terms))
