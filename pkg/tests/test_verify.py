"""
测试超平面排列胞腔与相等性判定（胞腔模式与随机回退）
"""

import os
import sys

import pytest

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.core.rational import AffineForm
from gramcal.decomp.brianchon_gram import brianchon_gram
from gramcal.errors import CapExceededError, InputError
from gramcal.indicators.formal_sum import FormalSum
from gramcal.verify.arrangement import arrangement_cells, canonical_hyperplanes, cell_soundness
from gramcal.verify.identity import VerdictStatus, check_all, identity_check, random_point_check


def test_two_lines_give_nine_cells():
    forms = [AffineForm.of([1, 0], 0), AffineForm.of([0, 1], 0)]
    cells = arrangement_cells(forms, 2)
    assert len(cells) == 9
    assert cells.by_dimension() == {0: 1, 1: 4, 2: 4}
    assert cell_soundness(cells, forms)


def test_triangle_arrangement_has_nineteen_cells():
    forms = list(fixtures.triangle().halfspaces)
    cells = arrangement_cells(forms, 2)
    assert len(cells) == 19
    assert cells.by_dimension() == {0: 3, 1: 9, 2: 7}
    assert cell_soundness(cells, forms)


def test_single_plane_in_space():
    cells = arrangement_cells([AffineForm.of([0, 0, 2], -1)], 3)
    assert len(cells) == 3
    assert [c.signs for c in cells.cells] == [(-1,), (0,), (1,)]


def test_duplicate_hyperplanes_collapse():
    forms = [AffineForm.of([1, 1], -1), AffineForm.of([-2, -2], 2), AffineForm.of(["1/2", "1/2"], "-1/2")]
    assert len(canonical_hyperplanes(forms, 2)) == 1


def test_cell_cap_is_enforced():
    forms = list(fixtures.cube().halfspaces)
    with pytest.raises(CapExceededError):
        arrangement_cells(forms, 3, cell_cap=5)


def test_identity_check_cap_without_fallback():
    wp = fixtures.cube()
    with pytest.raises(CapExceededError):
        identity_check(brianchon_gram(wp), FormalSum.single(wp), cell_cap=4)


def test_random_fallback_is_consistent_on_true_identity():
    wp = fixtures.hypercube(4)
    verdict = identity_check(brianchon_gram(wp), FormalSum.single(wp), cell_cap=4,
                             fallback_trials=50, seed=1)
    assert verdict.status == VerdictStatus.CONSISTENT
    assert verdict.mode == "random"
    assert verdict.passed and not verdict.is_equal


def test_random_fallback_finds_corruption():
    wp = fixtures.hypercube(4)
    bg = brianchon_gram(wp)
    # 去掉原点处的顶点锥
    corrupted = FormalSum(4, bg.terms[1:])
    verdict = identity_check(corrupted, FormalSum.single(wp), cell_cap=4,
                             fallback_trials=1000, seed=1)
    assert verdict.status == VerdictStatus.UNEQUAL
    assert verdict.witness is not None


def test_random_check_requires_trials():
    wp = fixtures.interval()
    with pytest.raises(InputError):
        random_point_check(brianchon_gram(wp), FormalSum.single(wp), trials=0)


def test_witness_reports_both_sides():
    wp = fixtures.interval()
    verdict = identity_check(FormalSum.zero(1), FormalSum.single(wp))
    assert verdict.status == VerdictStatus.UNEQUAL
    data = verdict.to_dict()
    assert data["verdict"] == "unequal"
    assert data["witness"]["lhs"] == "0"
    assert data["witness"]["rhs"] in ("q1", "q2", "1")


def test_check_all_keeps_order_and_names():
    wp = fixtures.triangle()
    bg = brianchon_gram(wp)
    target = FormalSum.single(wp)
    results = check_all([("a", bg, target), ("b", target, bg), ("c", bg, FormalSum.zero(2))])
    assert [name for name, _ in results] == ["a", "b", "c"]
    assert [v.is_equal for _, v in results] == [True, True, False]


def test_cube4_exact_cell_mode():
    wp = fixtures.hypercube(4)
    verdict = identity_check(brianchon_gram(wp), FormalSum.single(wp))
    assert verdict.is_equal
    # 每个坐标 5 段：x < 0, x = 0, 0 < x < 1, x = 1, x > 1
    assert verdict.checked == 5 ** 4
