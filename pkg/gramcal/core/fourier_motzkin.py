"""
Fourier-Motzkin 消元：带严格不等式的精确可行性判定与见证点
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from gramcal.core.rational import AffineForm, Point, check_dimension


class Relation(Enum):
    """约束关系：form(x) >= 0, > 0 或 = 0"""
    GE = ">=0"
    GT = ">0"
    EQ = "=0"


@dataclass(frozen=True)
class FeasibilityResult:
    """可行性判定结果；可行时 witness 精确满足所有约束"""

    feasible: bool
    witness: Optional[Point] = None

    def __bool__(self) -> bool:
        return self.feasible


Constraint = Tuple[AffineForm, Relation]
# 行：整数系数 + 有理常数项，含义 <coeffs, x> + const (>=, >, =) 0
_Row = Tuple[Tuple[int, ...], Fraction]

_INFEASIBLE = FeasibilityResult(False)


def _normalize(coeffs: Sequence[int], const: Fraction) -> _Row:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g <= 1:
        return tuple(coeffs), const
    return tuple(c // g for c in coeffs), const / g


def _row_of(form: AffineForm) -> _Row:
    ints = form.integer_row()
    return _normalize(ints[:-1], Fraction(ints[-1]))


def _trivially_holds(const: Fraction, strict: bool) -> bool:
    return const > 0 if strict else const >= 0


def _combine(p: _Row, n: _Row, var: int) -> _Row:
    """消去 var：p 中系数为正，n 中系数为负，正系数组合保持不等号方向"""
    a, b = p[0][var], -n[0][var]
    coeffs = [b * cp + a * cn for cp, cn in zip(p[0], n[0])]
    return _normalize(coeffs, b * p[1] + a * n[1])


class _InequalityPool:
    """按系数向量去重，只保留最紧的约束（常数更小；相同时严格优先）"""

    def __init__(self):
        self.rows: Dict[Tuple[int, ...], Tuple[Fraction, bool]] = {}
        self.violated = False

    def add(self, row: _Row, strict: bool) -> None:
        coeffs, const = row
        if all(c == 0 for c in coeffs):
            if not _trivially_holds(const, strict):
                self.violated = True
            return
        known = self.rows.get(coeffs)
        if known is None or const < known[0] or (const == known[0] and strict and not known[1]):
            self.rows[coeffs] = (const, strict)

    def items(self) -> List[Tuple[_Row, bool]]:
        return [((coeffs, const), strict) for coeffs, (const, strict) in self.rows.items()]


def _pick_value(lo: Optional[Fraction], lo_strict: bool,
                hi: Optional[Fraction], hi_strict: bool) -> Fraction:
    """在区间内取值：有界取中点，单侧有界取边界（严格时偏移 1）"""
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return lo + 1 if lo_strict else lo
    if lo is None:
        return hi - 1 if hi_strict else hi
    if lo == hi:
        return lo
    return (lo + hi) / 2


def fm_feasible(system: Sequence[Constraint], dim: int) -> FeasibilityResult:
    """
    判定线性系统是否可行

    先用等式逐个代入消元，再对剩余不等式做 Fourier-Motzkin 消元；
    派生不等式只要有一个父约束严格即为严格。可行时回代取开区间中点得到见证点。

    Args:
        system: (仿射形式, 关系) 列表
        dim: 环境维数

    Returns:
        FeasibilityResult
    """
    check_dimension((form for form, _ in system), dim)

    equalities: List[_Row] = []
    inequalities: List[Tuple[_Row, bool]] = []
    for form, relation in system:
        row = _row_of(form)
        if relation == Relation.EQ:
            equalities.append(row)
        else:
            inequalities.append((row, relation == Relation.GT))

    # 1. 等式代入
    eq_steps: List[Tuple[int, _Row]] = []
    while equalities:
        coeffs, const = equalities.pop()
        var = next((k for k in range(dim) if coeffs[k] != 0), None)
        if var is None:
            if const != 0:
                return _INFEASIBLE
            continue
        if coeffs[var] < 0:
            coeffs, const = tuple(-c for c in coeffs), -const
        pivot = (coeffs, const)
        a = coeffs[var]

        def substitute(row: _Row) -> _Row:
            r = row[0][var]
            if r == 0:
                return row
            new = [a * c - r * pc for c, pc in zip(row[0], pivot[0])]
            return _normalize(new, a * row[1] - r * pivot[1])

        equalities = [substitute(row) for row in equalities]
        inequalities = [(substitute(row), strict) for row, strict in inequalities]
        eq_steps.append((var, pivot))

    pool = _InequalityPool()
    for row, strict in inequalities:
        pool.add(row, strict)
    if pool.violated:
        return _INFEASIBLE

    # 2. 不等式消元，从最后一个变量开始
    eliminated = {var for var, _ in eq_steps}
    fm_steps: List[Tuple[int, List[Tuple[_Row, bool]]]] = []
    for var in reversed(range(dim)):
        if var in eliminated:
            continue
        current = pool.items()
        fm_steps.append((var, current))
        positive = [(r, s) for r, s in current if r[0][var] > 0]
        negative = [(r, s) for r, s in current if r[0][var] < 0]
        pool = _InequalityPool()
        for r, s in current:
            if r[0][var] == 0:
                pool.add(r, s)
        for p, sp in positive:
            for n, sn in negative:
                pool.add(_combine(p, n, var), sp or sn)
        if pool.violated:
            return _INFEASIBLE

    # 3. 回代
    values = [Fraction(0)] * dim
    for var, rows in reversed(fm_steps):
        lo, lo_strict, hi, hi_strict = None, False, None, False
        for (coeffs, const), strict in rows:
            a = coeffs[var]
            if a == 0:
                continue
            rest = const + sum(
                (c * values[k] for k, c in enumerate(coeffs) if k != var and c != 0),
                Fraction(0),
            )
            bound = -rest / a
            if a > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
        values[var] = _pick_value(lo, lo_strict, hi, hi_strict)

    for var, (coeffs, const) in reversed(eq_steps):
        rest = const + sum(
            (c * values[k] for k, c in enumerate(coeffs) if k != var and c != 0),
            Fraction(0),
        )
        values[var] = -rest / coeffs[var]

    return FeasibilityResult(True, tuple(values))


def satisfies(point: Sequence[Fraction], system: Sequence[Constraint]) -> bool:
    """逐条代入检查（测试与见证点校验用）"""
    for form, relation in system:
        value = form.evaluate(point)
        if relation == Relation.EQ and value != 0:
            return False
        if relation == Relation.GE and value < 0:
            return False
        if relation == Relation.GT and value <= 0:
            return False
    return True
