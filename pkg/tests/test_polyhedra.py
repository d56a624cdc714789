"""
测试多面体构造、面格枚举、一般性分类与切锥
"""

import os
import sys
from fractions import Fraction

import numpy as np
import pytest

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.core.rational import AffineForm, to_point
from gramcal.errors import GeometryError
from gramcal.polyhedra.cones import lineality_dim, relative_interior_point, tangent_cone
from gramcal.polyhedra.faces import (
    Genericity,
    classify_genericity,
    enumerate_faces,
    enumerate_vertices,
    smallest_face_containing,
)
from gramcal.polyhedra.polyhedron import HPolyhedron, build_polyhedron, is_bounded


def _forms(rows):
    return [AffineForm.of(r[:-1], r[-1]) for r in rows]


def test_build_polyhedron_drops_redundant_halfspaces():
    # 第三个约束 x <= 5 对单位区间冗余
    P = build_polyhedron(_forms([(1, 0), (-1, 1), (-1, 5)]), 1)
    assert P.n_facets == 2
    assert P.halfspaces == tuple(_forms([(1, 0), (-1, 1)]))


def test_build_polyhedron_rejects_lower_dimensional_input():
    with pytest.raises(GeometryError):
        build_polyhedron(_forms([(1, 0), (-1, 0)]), 1)


def test_redundant_facet_weight_is_dropped():
    from gramcal.indicators.weighted import WeightedPolyhedron
    wp = WeightedPolyhedron.from_forms(_forms([(1, 0), (-1, 5), (-1, 1)]), 1, ["a", "b", "c"])
    assert wp.weights.labels() == ("a", "c")


def test_triangle_face_lattice():
    wp = fixtures.triangle()
    lattice = enumerate_faces(wp.polyhedron)
    assert lattice.counts() == {0: 3, 1: 3, 2: 1}
    assert lattice.euler_sum() == 1
    assert [f.label() for f in lattice.by_dim(1)] == ["F{1}", "F{2}", "F{3}"]
    assert lattice.faces[-1].is_polyhedron_itself
    # 面按 (维数, 活跃集) 排序
    keys = [f.sort_key for f in lattice.faces]
    assert keys == sorted(keys)


def test_cube_and_simplex_face_counts():
    cube = enumerate_faces(fixtures.cube().polyhedron)
    assert cube.counts() == {0: 8, 1: 12, 2: 6, 3: 1}
    simplex = enumerate_faces(fixtures.simplex(3).polyhedron)
    assert len(simplex.faces) == 15


def test_pyramid_is_nonsimple_only_at_apex():
    wp = fixtures.pyramid()
    lattice = enumerate_faces(wp.polyhedron)
    assert len(lattice.faces) == 19
    report = classify_genericity(wp.polyhedron, lattice)
    assert report.kind == Genericity.NONSIMPLE_VERTICES_ONLY
    assert [v.point for v in report.nonsimple_vertices] == [to_point((0, 0, 1))]
    assert report.nonsimple_vertices[0].active_set == (1, 2, 3, 4)


def test_octahedron_has_six_nonsimple_vertices():
    wp = fixtures.octahedron()
    lattice = enumerate_faces(wp.polyhedron)
    assert lattice.counts() == {0: 6, 1: 12, 2: 8, 3: 1}
    report = classify_genericity(wp.polyhedron, lattice)
    assert report.kind == Genericity.NONSIMPLE_VERTICES_ONLY
    assert len(report.nonsimple_vertices) == 6


def test_simple_fixtures_are_simple():
    for wp in fixtures.simple_fixtures(n_random=5):
        assert classify_genericity(wp.polyhedron).is_simple


def test_random_polygons_are_bounded_and_small():
    for seed in range(10):
        wp = fixtures.random_polygon(seed)
        assert is_bounded(wp.polyhedron)
        assert 3 <= wp.polyhedron.n_facets <= 8


def test_unbounded_cone_faces_by_subset_closure():
    # 第一象限 {x >= 0, y >= 0}
    quadrant = HPolyhedron(2, tuple(_forms([(1, 0, 0), (0, 1, 0)])))
    assert not is_bounded(quadrant)
    lattice = enumerate_faces(quadrant)
    assert lattice.counts() == {0: 1, 1: 2, 2: 1}


def test_facet_cap():
    with pytest.raises(GeometryError):
        enumerate_faces(fixtures.cube().polyhedron, max_facets=4)


def test_smallest_face_containing():
    wp = fixtures.triangle()
    lattice = enumerate_faces(wp.polyhedron)
    P = wp.polyhedron
    assert smallest_face_containing(lattice, P, to_point((0, 0))).active_set == (0, 1)
    assert smallest_face_containing(lattice, P, to_point(("1/2", 0))).active_set == (1,)
    assert smallest_face_containing(lattice, P, to_point(("1/4", "1/4"))).is_polyhedron_itself
    assert smallest_face_containing(lattice, P, to_point((1, 1))) is None


def test_tangent_cones_and_lineality():
    wp = fixtures.unit_square()
    lattice = enumerate_faces(wp.polyhedron)
    dims = [lineality_dim(tangent_cone(wp.polyhedron, f)) for f in lattice.faces]
    # 顶点锥尖，棱的切锥含一条直线，P 本身的切锥是整个平面
    assert dims == [0, 0, 0, 0, 1, 1, 1, 1, 2]
    vertex = lattice.faces[0]
    cone = tangent_cone(wp.polyhedron, vertex)
    assert cone.contains(to_point((5, 7)))
    assert not cone.contains(to_point((-1, 0)))


def test_relative_interior_point():
    P = fixtures.triangle().polyhedron
    x = relative_interior_point(P, active=(2,))
    assert P.active_set(x) == frozenset({2})
    assert all(s > 0 for i, s in enumerate(P.slacks(x)) if i != 2)
    with pytest.raises(GeometryError):
        relative_interior_point(P, active=(0, 1, 2))


def test_enumerate_vertices_of_raw_system():
    # 未化简的系统（含重复约束）也能得到顶点
    system = HPolyhedron(1, tuple(_forms([(1, 0), (1, 0), (-1, 2)])))
    assert [v.point for v in enumerate_vertices(system)] == [(Fraction(0),), (Fraction(2),)]


def test_lineality_equals_face_dimension():
    shapes = fixtures.simple_fixtures(n_random=20) + [fixtures.pyramid(), fixtures.octahedron()]
    for wp in shapes:
        lattice = enumerate_faces(wp.polyhedron)
        for face in lattice.faces:
            assert lineality_dim(tangent_cone(wp.polyhedron, face)) == face.dim, face.label()


def test_vertex_cones_contain_the_polytope():
    shapes = fixtures.simple_fixtures(n_random=10) + [fixtures.pyramid(), fixtures.octahedron()]
    for wp in shapes:
        lattice = enumerate_faces(wp.polyhedron)
        for v in lattice.vertices:
            cone = tangent_cone(wp.polyhedron, lattice.face_of(v.active_set))
            assert all(cone.contains(u.point) for u in lattice.vertices)


def test_enumerate_vertices_ignores_halfspace_order():
    rng = np.random.default_rng(7)
    shapes = [fixtures.cube(), fixtures.pyramid(), fixtures.octahedron()]
    shapes += [fixtures.random_polygon(seed) for seed in range(5)]
    for wp in shapes:
        P = wp.polyhedron
        points = [v.point for v in enumerate_vertices(P)]
        for _ in range(3):
            order = [int(i) for i in rng.permutation(P.n_facets)]
            shuffled = P.subsystem(order)
            assert [v.point for v in enumerate_vertices(shuffled)] == points
            # 活跃集随下标一起置换
            for v in enumerate_vertices(shuffled):
                original = tuple(sorted(order[i] for i in v.active_set))
                assert original == tuple(sorted(P.active_set(v.point)))
