"""
形式和相等性判定

胞腔模式：在每个胞腔的代表点上比较两边的多项式值，结论是精确的；
随机模式：超过胞腔上限时的启发式回退，"consistent" 不是证明
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from gramcal.config import GramcalConfig
from gramcal.core.linalg import SolutionKind, solve_affine
from gramcal.core.rational import AffineForm, Point, dot, format_rational, vec_scale, vec_sub
from gramcal.core.weights import format_poly
from gramcal.errors import CapExceededError, InputError
from gramcal.indicators.formal_sum import FormalSum
from gramcal.verify.arrangement import (
    CellDecomposition,
    SignVector,
    arrangement_cells,
    canonical_hyperplanes,
    format_signs,
    sign_of,
)


class VerdictStatus(Enum):
    """判定结果"""
    EQUAL = "equal"
    UNEQUAL = "unequal"
    CONSISTENT = "consistent"


@dataclass(frozen=True)
class Witness:
    """反例：代表点、符号向量与两边的值"""

    point: Point
    signs: SignVector
    lhs: str
    rhs: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            'point': [format_rational(a) for a in self.point],
            'signs': format_signs(self.signs),
            'lhs': self.lhs,
            'rhs': self.rhs,
        }


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    mode: str
    checked: int
    hyperplanes: int
    witness: Optional[Witness] = None

    @property
    def is_equal(self) -> bool:
        return self.status == VerdictStatus.EQUAL

    @property
    def passed(self) -> bool:
        """equal，或随机模式下未发现反例"""
        return self.status != VerdictStatus.UNEQUAL

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'verdict': self.status.value,
            'mode': self.mode,
            'checked': self.checked,
            'hyperplanes': self.hyperplanes,
        }
        if self.witness is not None:
            data['witness'] = self.witness.to_dict()
        return data


class _CompiledSum:
    """
    把形式和编译到多项式环与超平面下标上

    每项记为 (系数, [(超平面下标, 方向, 权重)])，之后只需查符号向量求值
    """

    def __init__(self, s: FormalSum, hyperplanes: Sequence[AffineForm], R):
        self.R = R
        index = {h: i for i, h in enumerate(hyperplanes)}
        self.terms = []
        for term in s.terms:
            coeff = R.from_expr(term.coeff)
            factors = []
            empty = False
            for form, w in zip(term.body.halfspaces, term.body.weights.weights):
                if form.is_trivial():
                    if form.offset < 0:
                        empty = True
                    elif form.offset == 0:
                        coeff = coeff * R.from_expr(w)
                    continue
                h = form.canonical()
                k = next(j for j, a in enumerate(h.normal) if a != 0)
                orientation = sign_of(form.normal[k] / h.normal[k])
                factors.append((index[h], orientation, R.from_expr(w)))
            if not empty and coeff:
                self.terms.append((coeff, factors))

    def value(self, signs: SignVector):
        total = self.R.zero
        for coeff, factors in self.terms:
            value = coeff
            for i, orientation, w in factors:
                s = orientation * signs[i]
                if s < 0:
                    break
                if s == 0:
                    value = value * w
            else:
                total += value
        return total


def _ring_for(lhs: FormalSum, rhs: FormalSum):
    names = sorted(lhs.names() | rhs.names())
    if not names:
        return ring("", QQ)[0]
    return ring([Symbol(n) for n in names], QQ)[0]


def _format(value) -> str:
    return format_poly(value.as_expr())


def _evaluators(lhs: FormalSum, rhs: FormalSum, hyperplanes: Sequence[AffineForm]):
    if lhs.dim != rhs.dim:
        raise InputError(f"形式和维数不一致: {lhs.dim} vs {rhs.dim}")
    R = _ring_for(lhs, rhs)
    return _CompiledSum(lhs, hyperplanes, R), _CompiledSum(rhs, hyperplanes, R)


def identity_check(lhs: FormalSum, rhs: FormalSum, cell_cap: Optional[int] = None,
                   fallback_trials: Optional[int] = None, seed: Optional[int] = None,
                   cells: Optional[CellDecomposition] = None,
                   verbose: Optional[bool] = None) -> Verdict:
    """
    判定两个形式和作为函数是否相等（对所有不定元的多项式恒等）

    Args:
        lhs, rhs: 形式和
        cell_cap: 超平面个数上限，默认 GramcalConfig.CELL_CAP
        fallback_trials: 超过上限时的随机试验次数；None 表示不回退
        seed: 随机种子
        cells: 可复用的胞腔分解（须覆盖两边所有超平面）

    Returns:
        Verdict

    Raises:
        CapExceededError: 超过上限且未允许回退
    """
    forms = lhs.hyperplanes() + rhs.hyperplanes()
    if cells is None or not cells.covers(forms):
        cap = GramcalConfig.CELL_CAP if cell_cap is None else cell_cap
        hyperplanes = canonical_hyperplanes(forms, lhs.dim)
        if len(hyperplanes) > cap:
            if fallback_trials:
                return random_point_check(lhs, rhs, fallback_trials, seed)
            raise CapExceededError(len(hyperplanes), cap)
        cells = arrangement_cells(hyperplanes, lhs.dim, cell_cap=cap, verbose=verbose)

    left, right = _evaluators(lhs, rhs, cells.hyperplanes)
    for cell in cells.cells:
        lv, rv = left.value(cell.signs), right.value(cell.signs)
        if lv != rv:
            witness = Witness(cell.point, cell.signs, _format(lv), _format(rv))
            return Verdict(VerdictStatus.UNEQUAL, 'cells', len(cells), len(cells.hyperplanes), witness)
    return Verdict(VerdictStatus.EQUAL, 'cells', len(cells), len(cells.hyperplanes))


def _random_rational(rng: np.random.Generator, bound: int) -> Fraction:
    denominator = int(rng.integers(1, 17))
    return Fraction(int(rng.integers(-bound * denominator, bound * denominator + 1)), denominator)


def _project(x: Point, h: AffineForm) -> Point:
    """x 在超平面 h = 0 上的正交投影（精确）"""
    norm = dot(h.normal, h.normal)
    return vec_sub(x, vec_scale(h.evaluate(x) / norm, h.normal))


def random_point_check(lhs: FormalSum, rhs: FormalSum, trials: Optional[int] = None,
                       seed: Optional[int] = None) -> Verdict:
    """
    随机点检验（启发式）

    每次试验取三个点：一般位置的随机有理点、某个超平面上的点、两个超平面交上的点

    Args:
        lhs, rhs: 形式和
        trials: 试验次数，默认 GramcalConfig.FALLBACK_TRIALS
        seed: 随机种子，默认 GramcalConfig.SEED

    Returns:
        Verdict：unequal 带反例，否则 consistent
    """
    trials = GramcalConfig.FALLBACK_TRIALS if trials is None else trials
    seed = GramcalConfig.SEED if seed is None else seed
    if trials < 1:
        raise InputError(f"试验次数必须 >= 1，得到 {trials}")

    d = lhs.dim
    hyperplanes = canonical_hyperplanes(lhs.hyperplanes() + rhs.hyperplanes(), d)
    left, right = _evaluators(lhs, rhs, hyperplanes)
    rng = np.random.default_rng(seed)
    bound = 2 + max((int(abs(h.offset)) for h in hyperplanes), default=0)

    def generic() -> Point:
        return tuple(_random_rational(rng, bound) for _ in range(d))

    def on_one() -> Point:
        x = generic()
        if not hyperplanes:
            return x
        return _project(x, hyperplanes[int(rng.integers(len(hyperplanes)))])

    def on_two() -> Point:
        if len(hyperplanes) < 2:
            return on_one()
        i, j = rng.choice(len(hyperplanes), size=2, replace=False)
        solution = solve_affine([hyperplanes[int(i)], hyperplanes[int(j)]], d)
        if solution.kind == SolutionKind.INFEASIBLE:
            return _project(generic(), hyperplanes[int(i)])
        x = solution.point
        for direction in solution.directions:
            x = tuple(a + _random_rational(rng, bound) * b for a, b in zip(x, direction))
        return x

    checked = 0
    for _ in range(trials):
        for sample in (generic, on_one, on_two):
            x = sample()
            checked += 1
            signs = tuple(sign_of(h.evaluate(x)) for h in hyperplanes)
            lv, rv = left.value(signs), right.value(signs)
            if lv != rv:
                witness = Witness(x, signs, _format(lv), _format(rv))
                return Verdict(VerdictStatus.UNEQUAL, 'random', checked, len(hyperplanes), witness)
    return Verdict(VerdictStatus.CONSISTENT, 'random', checked, len(hyperplanes))


def check_all(checks: Sequence[Tuple[str, FormalSum, FormalSum]], cell_cap: Optional[int] = None,
              fallback_trials: Optional[int] = None, seed: Optional[int] = None,
              verbose: Optional[bool] = None) -> List[Tuple[str, Verdict]]:
    """
    批量判定；所有超平面总数不超过上限时共用一个胞腔分解

    Returns:
        [(名字, Verdict)]，顺序与 checks 相同
    """
    if not checks:
        return []
    verbose = GramcalConfig.VERBOSE if verbose is None else verbose
    cap = GramcalConfig.CELL_CAP if cell_cap is None else cell_cap
    dim = checks[0][1].dim
    forms = [f for _, lhs, rhs in checks for f in lhs.hyperplanes() + rhs.hyperplanes()]
    hyperplanes = canonical_hyperplanes(forms, dim)
    shared = None
    if len(hyperplanes) <= cap:
        shared = arrangement_cells(hyperplanes, dim, cell_cap=cap, verbose=verbose)

    results = []
    for name, lhs, rhs in checks:
        verdict = identity_check(lhs, rhs, cell_cap=cap, fallback_trials=fallback_trials,
                                 seed=seed, cells=shared, verbose=verbose)
        if verbose:
            icon = "✅" if verdict.is_equal else ("⚠️ " if verdict.passed else "❌")
            print(f"{icon} {name}: {verdict.status.value} ({verdict.mode}, {verdict.checked})")
        results.append((name, verdict))
    return results
