"""
测试极分解：分组、翻转锥、符号与自动选取 ξ
"""

import os
import sys

import pytest
import sympy

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.core.rational import to_point
from gramcal.decomp.polar import (
    edge_directions,
    is_polarizing,
    polar_decompose,
    polar_group,
    polar_group_sum,
    polar_sum,
    polarize_vertex_cone,
    sample_polarizing,
)
from gramcal.decomp.registry import DecompositionRegistry
from gramcal.errors import GenericityError, InputError, PolarizationError
from gramcal.indicators.formal_sum import FormalSum
from gramcal.polyhedra.faces import enumerate_faces
from gramcal.verify.identity import identity_check

q = sympy.Symbol("q")
XI = to_point((1, 2))


def _uniform(wp):
    return wp.with_uniform_weight("q")


def test_triangle_groups_and_flips():
    wp = _uniform(fixtures.triangle())
    lattice = enumerate_faces(wp.polyhedron)
    sizes = [len(polar_group(lattice, v, XI)) for v in lattice.vertices]
    cones = polar_decompose(wp, XI, lattice)
    # 顶点按坐标排序：(0,0), (0,1), (1,0)
    assert [c.vertex.point for c in cones] == [to_point(p) for p in [(0, 0), (0, 1), (1, 0)]]
    assert sizes == [4, 1, 2]
    assert [c.flip_count for c in cones] == [2, 0, 1]
    assert [c.sign for c in cones] == [1, 1, -1]


def test_flipped_weights_at_vertex_one_zero():
    wp = _uniform(fixtures.triangle())
    cone = polarize_vertex_cone(wp, (1, 0), XI)
    # 沿 y 轴方向离开 y >= 0 的棱 ξ 递增被翻转；沿斜边的棱不翻转
    assert cone.flipped == (1,)
    assert cone.body.weights.weights == (1 - q, q)
    assert cone.term().coeff == -1


def test_group_equals_polarized_cone():
    shapes = [fixtures.interval(), fixtures.triangle(), fixtures.unit_square()]
    for wp in shapes + [fixtures.random_polygon(seed) for seed in range(10)]:
        wp = _uniform(wp)
        lattice = enumerate_faces(wp.polyhedron)
        xi = sample_polarizing(wp, lattice)
        for cone in polar_decompose(wp, xi, lattice):
            group = polar_group_sum(wp, cone.vertex, xi, lattice)
            assert identity_check(FormalSum(wp.dim, (cone.term(),)), group).is_equal


def test_polar_sum_equals_uniform_indicator():
    shapes = [fixtures.interval(), fixtures.triangle(), fixtures.unit_square()]
    shapes += [fixtures.random_polygon(seed) for seed in range(10)]
    for wp in shapes:
        wp = _uniform(wp)
        total = polar_sum(polar_decompose(wp), wp.dim)
        assert identity_check(total, FormalSum.single(wp)).is_equal


def test_groups_partition_faces():
    shapes = [fixtures.triangle(), fixtures.cube()]
    for wp in shapes + [fixtures.random_polygon(seed) for seed in range(10)]:
        lattice = enumerate_faces(wp.polyhedron)
        xi = sample_polarizing(wp, lattice)
        covered = [f.active_set for v in lattice.vertices for f in polar_group(lattice, v, xi)]
        assert sorted(covered) == sorted(f.active_set for f in lattice.faces)


def test_flip_parity_under_negated_xi():
    shapes = [fixtures.triangle(), fixtures.cube()]
    for wp in shapes + [fixtures.random_polygon(seed) for seed in range(10)]:
        wp = _uniform(wp)
        lattice = enumerate_faces(wp.polyhedron)
        xi = sample_polarizing(wp, lattice)
        neg = tuple(-a for a in xi)
        for v in lattice.vertices:
            plus = polarize_vertex_cone(wp, v, xi, lattice).flip_count
            minus = polarize_vertex_cone(wp, v, neg, lattice).flip_count
            assert plus + minus == wp.dim


def test_edge_directions_leave_their_facet():
    wp = fixtures.triangle()
    lattice = enumerate_faces(wp.polyhedron)
    v = lattice.vertex_at(to_point((0, 0)))
    edges = edge_directions(wp, v)
    assert edges == (to_point((1, 0)), to_point((0, 1)))


def test_general_weights_also_verify():
    # 面权重各不相同时翻转规则逐面成立
    wp = fixtures.triangle()
    total = polar_sum(polar_decompose(wp, XI), 2)
    assert identity_check(total, FormalSum.single(wp)).is_equal


def test_non_polarizing_xi_is_rejected():
    wp = _uniform(fixtures.unit_square())
    lattice = enumerate_faces(wp.polyhedron)
    assert not is_polarizing((1, 0), lattice)
    with pytest.raises(PolarizationError):
        polar_decompose(wp, (1, 0), lattice)
    with pytest.raises(InputError):
        polar_decompose(wp, (1, 2, 3), lattice)


def test_sample_polarizing_is_deterministic():
    wp = fixtures.unit_square()
    assert sample_polarizing(wp) == to_point((1, 2))
    assert sample_polarizing(wp) == sample_polarizing(wp)


def test_polar_requires_simple_polytope():
    wp = _uniform(fixtures.pyramid())
    with pytest.raises(GenericityError):
        polar_decompose(wp, (1, 2, 4))


def test_polar_mode_checks_and_details():
    wp = _uniform(fixtures.triangle())
    result = DecompositionRegistry.get_mode("polar", {"xi": (1, 2)}).decompose(wp)
    names = [name for name, _, _ in result.checks]
    assert names == ["main", "group(0,0)", "group(0,1)", "group(1,0)"]
    assert result.details["polar"]["groups_partition_faces"]
    assert result.details["polar"]["xi"] == ["1", "2"]
    for name, lhs, rhs in result.checks:
        assert identity_check(lhs, rhs).is_equal, name


def test_polar_mode_requires_uniform_weights():
    with pytest.raises(InputError):
        DecompositionRegistry.get_mode("polar").decompose(fixtures.triangle())
    mode = DecompositionRegistry.get_mode("polar", {"require_uniform": False})
    assert len(mode.decompose(fixtures.triangle()).terms) == 3
