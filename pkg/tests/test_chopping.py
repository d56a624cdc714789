"""
测试非简单顶点的截顶流程（方底棱锥与正八面体）
"""

import os
import sys
from fractions import Fraction

import pytest
import sympy

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.core.rational import AffineForm, to_point
from gramcal.decomp.brianchon_gram import brianchon_gram
from gramcal.decomp.chopping import chop_nonsimple, nonsimple_bg_witness
from gramcal.decomp.registry import DecompositionRegistry
from gramcal.errors import ChopError
from gramcal.indicators.weighted import weight_at
from gramcal.polyhedra.faces import classify_genericity, enumerate_faces
from gramcal.verify.identity import check_all, identity_check


def test_pyramid_apex_weight():
    wp = fixtures.pyramid()
    q2, q3, q4, q5 = sympy.symbols("q2 q3 q4 q5")
    assert weight_at(wp, to_point((0, 0, 1))) == q2 * q3 * q4 * q5


def test_pyramid_chop_cuts_at_half_height():
    wp = fixtures.pyramid()
    chop = chop_nonsimple(wp)
    assert chop.attempts == 1
    (cut,) = chop.chops
    assert cut.eta == to_point((0, 0, -4))
    assert cut.threshold == Fraction(-2)
    assert cut.halfspace == AffineForm.of([0, 0, -4], 2)

    chopped = chop.chopped.polyhedron
    assert chopped.n_facets == 6
    assert classify_genericity(chopped).is_simple
    index = chop.cut_index(cut)
    assert chop.chopped.weights[index] == 1
    # 截出的小正方形有 4 个顶点
    lattice = enumerate_faces(chopped)
    assert sum(1 for v in lattice.vertices if index in v.active_set) == 4


def test_simple_input_is_not_chopped():
    chop = chop_nonsimple(fixtures.cube())
    assert chop.is_trivial
    assert chop.chopped is chop.original


def test_pyramid_witness_identities():
    wp = fixtures.pyramid()
    lattice = enumerate_faces(wp.polyhedron)
    chop = chop_nonsimple(wp, lattice)
    witness = nonsimple_bg_witness(wp, chop, lattice)
    assert len(witness.f_p) == 19

    results = dict(check_all(witness.checks()))
    assert list(results) == ["chopped_bg", "key_difference", "correction", "truncation", "conclusion"]
    for name, verdict in results.items():
        assert verdict.is_equal, name


def test_key_difference_value_above_cut():
    wp = fixtures.pyramid()
    witness = nonsimple_bg_witness(wp, chop_nonsimple(wp))
    x = to_point((0, 0, "3/4"))
    assert witness.key_difference.evaluate(x) == -1
    assert witness.cut_terms.evaluate(x) == -1
    # 截平面以下两者为零
    assert witness.key_difference.evaluate(to_point((0, 0, "1/4"))) == 0


def test_bg_mode_on_pyramid_adds_pipeline_checks():
    result = DecompositionRegistry.get_mode("bg").decompose(fixtures.pyramid())
    names = [name for name, _, _ in result.checks]
    assert names == ["main", "chopped_bg", "key_difference", "correction", "truncation"]
    assert len(result.terms) == 19
    assert result.details["chop"]["attempts"] == 1
    for name, verdict in check_all(result.checks):
        assert verdict.is_equal, name


def test_octahedron_needs_a_second_attempt():
    wp = fixtures.octahedron()
    chop = chop_nonsimple(wp)
    assert chop.attempts == 2
    assert len(chop.chops) == 6
    assert classify_genericity(chop.chopped.polyhedron).is_simple


def test_octahedron_chop_exhausts_with_one_attempt():
    with pytest.raises(ChopError) as info:
        chop_nonsimple(fixtures.octahedron(), max_retries=1)
    assert len(info.value.diagnostics) == 1


def test_octahedron_conclusion():
    wp = fixtures.octahedron()
    lattice = enumerate_faces(wp.polyhedron)
    bg = brianchon_gram(wp, lattice)
    assert len(bg) == 27
    verdict = identity_check(bg, nonsimple_bg_witness(wp, chop_nonsimple(wp, lattice), lattice).indicator,
                             cell_cap=14)
    assert verdict.is_equal


def test_octahedron_all_witness_identities():
    wp = fixtures.octahedron()
    lattice = enumerate_faces(wp.polyhedron)
    witness = nonsimple_bg_witness(wp, chop_nonsimple(wp, lattice), lattice)
    results = check_all(witness.checks(), cell_cap=14)
    assert [name for name, _ in results] == [
        "chopped_bg", "key_difference", "correction", "truncation", "conclusion",
    ]
    for name, verdict in results:
        assert verdict.is_equal, name
