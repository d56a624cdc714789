"""
标准多胞形样例

默认权重为 q1..qN（按半空间顺序），需要统一权重时调用 with_uniform_weight()
"""

from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional

import numpy as np

from gramcal.core.rational import AffineForm
from gramcal.indicators.weighted import WeightedPolyhedron


def _form(normal, offset) -> AffineForm:
    return AffineForm.of(normal, offset)


def interval(a=0, b=1) -> WeightedPolyhedron:
    """[a, b]：x - a >= 0, -x + b >= 0"""
    a, b = Fraction(a), Fraction(b)
    return WeightedPolyhedron.from_forms([_form([1], -a), _form([-1], b)], 1)


def triangle() -> WeightedPolyhedron:
    """T = {x >= 0, y >= 0, -x - y + 1 >= 0}"""
    forms = [_form([1, 0], 0), _form([0, 1], 0), _form([-1, -1], 1)]
    return WeightedPolyhedron.from_forms(forms, 2)


def hypercube(d: int) -> WeightedPolyhedron:
    """[0,1]^d，半空间顺序 x1 >= 0, -x1 + 1 >= 0, x2 >= 0, ..."""
    forms = []
    for k in range(d):
        e = [1 if j == k else 0 for j in range(d)]
        forms.append(_form(e, 0))
        forms.append(_form([-a for a in e], 1))
    return WeightedPolyhedron.from_forms(forms, d)


def unit_square() -> WeightedPolyhedron:
    return hypercube(2)


def cube() -> WeightedPolyhedron:
    return hypercube(3)


def simplex(d: int) -> WeightedPolyhedron:
    """标准单纯形 {x_i >= 0, 1 - Σ x_i >= 0}"""
    forms = [_form([1 if j == k else 0 for j in range(d)], 0) for k in range(d)]
    forms.append(_form([-1] * d, 1))
    return WeightedPolyhedron.from_forms(forms, d)


def pyramid() -> WeightedPolyhedron:
    """方底棱锥，底面 z = 0，顶点 (0,0,1) 落在 4 个斜面上"""
    forms = [
        _form([0, 0, 1], 0),
        _form([-1, 0, -1], 1),
        _form([1, 0, -1], 1),
        _form([0, -1, -1], 1),
        _form([0, 1, -1], 1),
    ]
    return WeightedPolyhedron.from_forms(forms, 3)


def octahedron() -> WeightedPolyhedron:
    """conv{±e_i}：1 - <s, x> >= 0，s ∈ {±1}^3"""
    forms = [_form([-a for a in s], 1) for s in product((1, -1), repeat=3)]
    return WeightedPolyhedron.from_forms(forms, 3)


def random_polygon(seed: int, max_edges: int = 8) -> WeightedPolyhedron:
    """
    随机凸多边形（有理顶点，至多 max_edges 条边）

    法向量取近似均匀分布角度的整数向量，偏移为正整数，所以原点在内部；
    至少 4 个方向且相邻间隔不超过 3π/4，结果有界；平面多边形总是简单的
    """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(4, max_edges + 1))
    base = 2 * np.pi * np.arange(n) / n
    angles = base + rng.uniform(0, np.pi / n, size=n)
    forms = []
    for theta in angles:
        normal = [int(round(8 * np.cos(theta))), int(round(8 * np.sin(theta)))]
        if normal == [0, 0]:
            continue
        offset = int(rng.integers(2, 6)) * max(abs(normal[0]), abs(normal[1]))
        forms.append(_form([-normal[0], -normal[1]], offset))
    return WeightedPolyhedron.from_forms(forms, 2)


FIXTURES: Dict[str, Callable[[], WeightedPolyhedron]] = {
    'interval': interval,
    'interval03': lambda: interval(0, 3),
    'triangle': triangle,
    'square': unit_square,
    'cube': cube,
    'simplex3': lambda: simplex(3),
    'cube4': lambda: hypercube(4),
    'pyramid': pyramid,
    'octahedron': octahedron,
}


def simple_fixtures(n_random: int = 20, seed: int = 0) -> List[WeightedPolyhedron]:
    """简单多胞形：区间、三角形、正方形、立方体、3-单纯形和若干随机多边形"""
    shapes = [interval(), triangle(), unit_square(), cube(), simplex(3)]
    shapes.extend(random_polygon(seed + k) for k in range(n_random))
    return shapes


def get_fixture(name: str) -> Optional[WeightedPolyhedron]:
    factory = FIXTURES.get(name)
    return factory() if factory else None
