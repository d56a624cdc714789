"""
测试加权特征函数与形式和
"""

import os
import sys
from fractions import Fraction
from itertools import product

import pytest
import sympy

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.core import weights as wr
from gramcal.core.rational import to_point
from gramcal.decomp.brianchon_gram import brianchon_gram
from gramcal.errors import InputError
from gramcal.indicators.formal_sum import FormalSum, fs_evaluate, fs_substitute
from gramcal.indicators.weighted import (
    WeightAssignment,
    WeightedPolyhedron,
    face_body,
    uniform_weight,
    weight_at,
)
from gramcal.polyhedra.faces import enumerate_faces

q1, q2, q3 = sympy.symbols("q1 q2 q3")


def test_weight_at_triangle():
    wp = fixtures.triangle()
    assert weight_at(wp, to_point((0, 0))) == q1 * q2
    assert weight_at(wp, to_point(("1/2", "1/2"))) == q3
    assert weight_at(wp, to_point(("1/4", "1/4"))) == 1
    assert weight_at(wp, to_point((1, 1))) == 0


def test_weighted_interval():
    wp = fixtures.interval(0, 3).with_uniform_weight("q")
    q = sympy.Symbol("q")
    values = [wp.weight_at(to_point((k,))) for k in range(-1, 5)]
    assert values == [0, q, 1, 1, q, 0]


def test_uniform_weight_matches_weight_at_on_simple_polytopes():
    q = sympy.Symbol("q")
    for wp in (fixtures.triangle(), fixtures.unit_square(), fixtures.cube()):
        uniform = wp.with_uniform_weight("q")
        lattice = enumerate_faces(wp.polyhedron)
        for v in lattice.vertices:
            assert uniform_weight(lattice, wp.polyhedron, q, v.point) == weight_at(uniform, v.point)


def test_weight_count_must_match():
    wp = fixtures.triangle()
    with pytest.raises(InputError):
        WeightedPolyhedron(wp.polyhedron, WeightAssignment.ones(2))


def test_weight_assignment_helpers():
    assert WeightAssignment.symbolic(3).labels() == ("q1", "q2", "q3")
    assert WeightAssignment.uniform(3).is_uniform()
    assert not WeightAssignment.symbolic(2).is_uniform()
    assert not WeightAssignment.of([2, 2]).is_uniform()
    assert WeightAssignment.symbolic(2).extended([1]).labels() == ("q1", "q2", "1")


def test_face_body_is_unweighted_indicator_of_face():
    wp = fixtures.triangle()
    lattice = enumerate_faces(wp.polyhedron)
    hypotenuse = lattice.face_of((2,))
    body = face_body(wp.polyhedron, hypotenuse)
    assert weight_at(body, to_point(("1/2", "1/2"))) == 1
    assert weight_at(body, to_point((1, 0))) == 1
    assert weight_at(body, to_point(("1/4", "1/4"))) == 0


def test_formal_sum_arithmetic_and_evaluation():
    wp = fixtures.triangle()
    s = FormalSum.single(wp, label="T")
    doubled = s + s
    assert len(doubled) == 2
    x = to_point((0, 0))
    assert fs_evaluate(doubled, x) == 2 * q1 * q2
    assert fs_evaluate(doubled - s - s, x) == 0
    assert fs_evaluate(s.scaled(q3), x) == wr.to_weight(q1 * q2 * q3)
    with pytest.raises(InputError):
        fs_evaluate(s, to_point((0,)))


def test_formal_sum_dimension_mismatch():
    with pytest.raises(InputError):
        FormalSum.single(fixtures.triangle()) + FormalSum.single(fixtures.interval())


def test_substitution_specializes_weights():
    s = FormalSum.single(fixtures.triangle())
    ones = fs_substitute(s, {"q1": 1, "q2": 1, "q3": 1})
    assert fs_evaluate(ones, to_point((0, 0))) == 1
    partial = s.substitute({"q1": "1/2"})
    assert fs_evaluate(partial, to_point((0, 0))) == q2 / 2


def test_substitution_rejects_unknown_names():
    s = FormalSum.single(fixtures.triangle())
    with pytest.raises(InputError):
        fs_substitute(s, {"y": 1})
    with pytest.raises(InputError):
        fs_substitute(s, {"q1": "1/q2"})


def _grid(dim, lo=-1, hi=2, step=Fraction(1, 2)):
    axis = [lo + k * step for k in range(int((hi - lo) / step) + 1)]
    return [tuple(p) for p in product(axis, repeat=dim)]


def test_fs_evaluate_is_linear():
    a = brianchon_gram(fixtures.triangle())
    b = FormalSum.single(fixtures.unit_square()) - FormalSum.single(fixtures.triangle())
    c1, c2 = sympy.Rational(3, 2), q1 - 2
    combined = a.scaled(c1) + b.scaled(c2)
    for x in _grid(2):
        expected = c1 * fs_evaluate(a, x) + c2 * fs_evaluate(b, x)
        assert wr.is_zero(fs_evaluate(combined, x) - expected), x


@pytest.mark.parametrize("assignment", [
    {"q1": 1, "q2": 1, "q3": 1},
    {"q2": "1/2"},
    {"q1": "q3 - 1", "q3": 0},
])
def test_fs_substitute_commutes_with_evaluation(assignment):
    s = brianchon_gram(fixtures.triangle()) + FormalSum.single(fixtures.triangle(), coeff=q2)
    substituted = fs_substitute(s, assignment)
    for x in _grid(2):
        after = wr.to_weight(fs_evaluate(substituted, x))
        before = wr.to_weight(wr.poly_substitute(fs_evaluate(s, x), assignment))
        assert wr.is_zero(after - before), x
