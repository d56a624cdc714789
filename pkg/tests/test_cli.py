"""
测试命令行：多胞形文件、JSON 报告往返、整点求和、SVG 面板与退出码
"""

import json
import os
import sys

import pytest
import sympy

# 添加项目根目录到路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from gramcal import fixtures
from gramcal.cli.commands import lattice_sum, parse_box, parse_xi
from gramcal.cli.main import main
from gramcal.cli.polytope_file import format_polytope_file, parse_polytope_text, read_polytope_file
from gramcal.cli.report import read_report
from gramcal.config import GramcalConfig
from gramcal.core.rational import to_point
from gramcal.errors import InputError

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
POLY_DIR = os.path.join(PROJECT_ROOT, 'data', 'polytopes')

q = sympy.Symbol("q")


def poly(name: str) -> str:
    return os.path.join(POLY_DIR, f"{name}.poly")


# ---------- 多胞形文件 ----------

def test_parse_polytope_text_default_and_explicit_weights():
    pf = parse_polytope_text("# 注释\ndim 2\nfacet 1 0 0\nfacet 0 1 0 weight=q\nfacet -1 -1 1 weight=1/2\n")
    assert pf.dim == 2
    assert pf.explicit_weights
    assert pf.weights == (sympy.Symbol("q1"), q, sympy.Rational(1, 2))
    wp = pf.to_weighted()
    assert wp.weight_at(to_point((0, 0))) == sympy.Symbol("q1") * q


@pytest.mark.parametrize("text, line", [
    ("dim 2\nvertex 0 0\n", 2),
    ("facet 1 0\n", 1),
    ("dim 2\nfacet 1 0\n", 2),
    ("dim 1\nfacet 1 0\nfacet 1 x\n", 3),
    ("dim 1\nfacet 1 0 weight=1/q\n", 2),
    ("dim 0\n", 1),
    ("dim 1\ndim 1\n", 2),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(InputError) as info:
        parse_polytope_text(text)
    assert info.value.line == line
    assert f"第 {line} 行" in str(info.value)


def test_parse_rejects_empty_files():
    with pytest.raises(InputError):
        parse_polytope_text("# nothing\n")
    with pytest.raises(InputError):
        parse_polytope_text("dim 2\n")


def test_format_is_idempotent_on_canonical_files():
    for name in ("interval03", "triangle", "pyramid"):
        text = format_polytope_file(read_polytope_file(poly(name)))
        assert format_polytope_file(parse_polytope_text(text)) == text


def test_data_files_match_fixtures():
    for name in ("interval", "triangle", "square", "cube", "simplex3", "cube4", "pyramid", "octahedron"):
        wp = read_polytope_file(poly(name)).to_weighted()
        assert wp.halfspaces == fixtures.get_fixture(name).halfspaces, name


def test_parse_xi_and_box():
    assert parse_xi("1,-1/2") == to_point((1, "-1/2"))
    assert parse_xi(None) is None
    with pytest.raises(InputError):
        parse_xi("1,,2")
    assert parse_box("0:1, -1/2:2", 2) == [(0, 1), (to_point(("-1/2",))[0], 2)]
    with pytest.raises(InputError):
        parse_box("0:inf", 1)
    with pytest.raises(InputError):
        parse_box("0:1", 2)
    with pytest.raises(InputError):
        parse_box("2:1", 1)


# ---------- 整点求和 ----------

def test_lattice_sums():
    wp = fixtures.interval(0, 3).with_uniform_weight("q")
    direct, via_bg = lattice_sum(wp, parse_box("-1:4", 1))
    assert direct == 2 * q + 2
    assert via_bg == direct

    square = fixtures.unit_square().with_uniform_weight("q")
    assert lattice_sum(square, parse_box("0:1,0:1", 2))[0] == 4 * q ** 2

    triangle = fixtures.triangle().with_uniform_weight("q")
    assert lattice_sum(triangle, parse_box("0:1,0:1", 2))[0] == 3 * q ** 2


def test_lattice_sum_two_ways_agree():
    boxes = {1: "-3:3", 2: "-2:3,-3:2", 3: "-1:2,-1:2,-1:2"}
    for wp in (fixtures.interval(), fixtures.triangle(), fixtures.unit_square(),
               fixtures.simplex(3), fixtures.pyramid(), fixtures.random_polygon(2)):
        direct, via_bg = lattice_sum(wp, parse_box(boxes[wp.dim], wp.dim))
        assert sympy.expand(direct - via_bg) == 0


def test_lattice_sum_command(capsys):
    assert main(["lattice-sum", poly("interval03"), "--box", "-1:4"]) == 0
    out = capsys.readouterr().out
    assert "✅" in out
    assert main(["lattice-sum", poly("interval03"), "--box", "-1:inf"]) == 2


# ---------- decompose / verify ----------

def test_decompose_triangle_report_round_trip(tmp_path, capsys):
    report_path = str(tmp_path / "triangle.json")
    summary_path = str(tmp_path / "triangle.txt")
    code = main(["decompose", poly("triangle"), "--mode", "bg", "--out", report_path,
                 "--summary", summary_path])
    assert code == 0

    with open(report_path, encoding="utf-8") as f:
        data = json.load(f)
    assert data["mode"] == "bg"
    assert len(data["terms"]) == 7
    assert data["verification"]["verdict"] == "equal"
    assert data["verification"]["mode"] == "cells"
    assert data["verification"]["cells"] == 19
    assert [t["label"] for t in data["terms"]][-1] == "C[P]"

    with open(summary_path, encoding="utf-8") as f:
        assert "所有恒等式精确成立" in f.read()

    loaded = read_report(report_path)
    assert len(loaded.terms) == 7
    assert main(["verify", report_path]) == 0


def test_report_is_stable_across_runs(tmp_path):
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert main(["decompose", poly("square"), "--out", first]) == 0
    assert main(["decompose", poly("square"), "--out", second]) == 0
    with open(first, encoding="utf-8") as a, open(second, encoding="utf-8") as b:
        assert a.read() == b.read()


def test_corrupted_report_fails_verification(tmp_path, capsys):
    report_path = str(tmp_path / "triangle.json")
    assert main(["decompose", poly("triangle"), "--out", report_path]) == 0
    with open(report_path, encoding="utf-8") as f:
        data = json.load(f)
    data["terms"][0]["coeff"] = "-1"
    with open(report_path, "w", encoding="utf-8") as f:
        json.dump(data, f)

    assert main(["verify", report_path]) == 1
    assert "❌" in capsys.readouterr().out


def test_verify_warns_when_recorded_verdict_differs(tmp_path, capsys):
    report_path = str(tmp_path / "triangle.json")
    assert main(["decompose", poly("triangle"), "--out", report_path]) == 0
    with open(report_path, encoding="utf-8") as f:
        data = json.load(f)
    assert data["config"]["verbose"] == GramcalConfig.VERBOSE
    data["checks"][0]["verdict"] = "unequal"
    with open(report_path, "w", encoding="utf-8") as f:
        json.dump(data, f)

    capsys.readouterr()
    assert main(["verify", report_path]) == 0
    out = capsys.readouterr().out
    assert "⚠️  main: 报告记录为 unequal，重新验证为 equal" in out


def test_malformed_report_is_an_input_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["verify", str(path)]) == 2
    path.write_text(json.dumps({"dim": 2}), encoding="utf-8")
    assert main(["verify", str(path)]) == 2


def test_decompose_polar_triangle(tmp_path):
    report_path = str(tmp_path / "polar.json")
    assert main(["decompose", poly("triangle"), "--mode", "polar", "--xi", "1,2",
                 "--out", report_path]) == 0
    with open(report_path, encoding="utf-8") as f:
        data = json.load(f)
    assert len(data["terms"]) == 3
    assert [c["flip_count"] for c in data["details"]["polar"]["cones"]] == [2, 0, 1]
    assert main(["verify", report_path]) == 0


def test_polar_rejects_non_uniform_explicit_weights(tmp_path):
    path = tmp_path / "mixed.poly"
    path.write_text("dim 1\nfacet 1 0 weight=a\nfacet -1 1 weight=b\n", encoding="utf-8")
    assert main(["decompose", str(path), "--mode", "polar"]) == 2


def test_polar_rejects_non_polarizing_xi():
    assert main(["decompose", poly("square"), "--mode", "polar", "--xi", "1,0"]) == 2


def test_decompose_pyramid_runs_chopping_pipeline(tmp_path):
    report_path = str(tmp_path / "pyramid.json")
    assert main(["decompose", poly("pyramid"), "--out", report_path]) == 0
    with open(report_path, encoding="utf-8") as f:
        data = json.load(f)
    assert len(data["terms"]) == 19
    assert [c["name"] for c in data["checks"]] == [
        "main", "chopped_bg", "key_difference", "correction", "truncation",
    ]
    assert all(c["verdict"] == "equal" for c in data["checks"])
    assert data["genericity"]["class"] == "nonsimple-vertices-only"
    assert main(["verify", report_path]) == 0


def test_cap_exceeded_exits_two():
    assert main(["decompose", poly("octahedron")]) == 2


def test_random_fallback_from_command_line(capsys):
    code = main(["decompose", poly("cube"), "--cell-cap", "4", "--fallback-samples", "20",
                 "--seed", "3"])
    assert code == 0
    assert "consistent" in capsys.readouterr().out


def test_missing_file_exits_two():
    assert main(["info", os.path.join(POLY_DIR, "missing.poly")]) == 2


def test_info_reports_nonsimple_vertex(capsys):
    assert main(["info", poly("pyramid")]) == 0
    out = capsys.readouterr().out
    assert "nonsimple-vertices-only" in out
    assert "(0, 0, 1)" in out


# ---------- render ----------

@pytest.mark.parametrize("name, mode, panels", [
    ("interval", "bg", 4),
    ("triangle", "bg", 8),
    ("triangle", "polar", 4),
    ("square", "brion", 10),
])
def test_render_panel_count(tmp_path, name, mode, panels):
    out = str(tmp_path / f"{name}-{mode}.svg")
    assert main(["render", poly(name), "--mode", mode, "--out", out]) == 0
    with open(out, encoding="utf-8") as f:
        svg = f.read()
    assert svg.startswith("<?xml")
    assert svg.count('class="panel"') == panels


def test_render_rejects_three_dimensions(tmp_path):
    assert main(["render", poly("cube"), "--out", str(tmp_path / "cube.svg")]) == 2
