"""
二维（及一维）分解图：每项一个面板，外加目标 1^w_P 面板

每个面板把该项的集合截到窗口内（多胞形包围盒向外扩 1），
画出区域、带权重标注的边界线和系数
"""

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import drawsvg as draw

from gramcal.config import GramcalConfig
from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm
from gramcal.decomp.base import DecompositionResult
from gramcal.errors import InputError
from gramcal.indicators.formal_sum import Term
from gramcal.indicators.weighted import WeightedPolyhedron
from gramcal.polyhedra.faces import enumerate_vertices
from gramcal.polyhedra.polyhedron import HPolyhedron


class Theme:
    """面板配色"""

    def __init__(
        self,
        background: str = "#ffffff",
        panel_stroke: str = "#cbd5e1",
        positive_fill: str = "#3b82f6",
        negative_fill: str = "#ef4444",
        neutral_fill: str = "#a855f7",
        facet_stroke: str = "#1e293b",
        text_color: str = "#1e293b",
        text_secondary: str = "#64748b",
    ):
        self.background = background
        self.panel_stroke = panel_stroke
        self.positive_fill = positive_fill
        self.negative_fill = negative_fill
        self.neutral_fill = neutral_fill
        self.facet_stroke = facet_stroke
        self.text_color = text_color
        self.text_secondary = text_secondary


DEFAULT_THEME = Theme()

HEADER = 24
PADDING = 12


def _lift(form: AffineForm) -> AffineForm:
    """一维半空间嵌入平面（y 方向不受限）"""
    return AffineForm(form.normal + (Fraction(0),), form.offset)


def _planar(body: WeightedPolyhedron) -> Tuple[Tuple[AffineForm, ...], Tuple[wr.Poly, ...]]:
    forms = body.halfspaces
    if body.dim == 1:
        forms = tuple(_lift(f) for f in forms)
    return forms, body.weights.weights


def window_of(target: WeightedPolyhedron) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """截取窗口 (xmin, xmax, ymin, ymax)：包围盒向外扩 1；一维时 y ∈ [-1, 1]"""
    points = [v.point for v in enumerate_vertices(target.polyhedron)]
    if not points:
        raise InputError("多胞形没有顶点，无法确定绘图窗口")
    xs = [p[0] for p in points]
    if target.dim == 1:
        return min(xs) - 1, max(xs) + 1, Fraction(-1), Fraction(1)
    ys = [p[1] for p in points]
    return min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1


def _window_forms(window) -> List[AffineForm]:
    xmin, xmax, ymin, ymax = window
    return [
        AffineForm.of([1, 0], -xmin),
        AffineForm.of([-1, 0], xmax),
        AffineForm.of([0, 1], -ymin),
        AffineForm.of([0, -1], ymax),
    ]


def clip_region(forms: Sequence[AffineForm], window) -> HPolyhedron:
    return HPolyhedron(2, tuple(forms) + tuple(_window_forms(window)))


def _convex_order(points: Sequence[Tuple[float, float]]) -> List[Tuple[float, float]]:
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    return sorted(points, key=lambda p: math.atan2(p[1] - cy, p[0] - cx))


class PanelRenderer:
    """把一个加权集合画进一个面板"""

    def __init__(self, window, size: int, theme: Theme = DEFAULT_THEME):
        self.window = window
        self.size = size
        self.theme = theme
        xmin, xmax, ymin, ymax = (float(a) for a in window)
        inner = size - 2 * PADDING
        self.scale = min(inner / (xmax - xmin), (inner - HEADER) / (ymax - ymin))
        self.x0, self.y1 = xmin, ymax

    def to_canvas(self, p) -> Tuple[float, float]:
        x = PADDING + (float(p[0]) - self.x0) * self.scale
        y = PADDING + HEADER + (self.y1 - float(p[1])) * self.scale
        return round(x, 3), round(y, 3)

    def _fill_for(self, coeff: wr.Poly) -> str:
        if not coeff.is_number:
            return self.theme.neutral_fill
        return self.theme.negative_fill if coeff < 0 else self.theme.positive_fill

    def render(self, body: WeightedPolyhedron, title: str, coeff: wr.Poly) -> draw.Group:
        group = draw.Group(class_="panel")
        group.append(draw.Rectangle(0, 0, self.size, self.size, fill="none",
                                    stroke=self.theme.panel_stroke))
        group.append(draw.Text(title, 12, self.size / 2, PADDING + 8,
                               fill=self.theme.text_color, text_anchor="middle",
                               font_family="monospace"))

        forms, weights = _planar(body)
        region = clip_region(forms, self.window)
        vertices = enumerate_vertices(region)
        if not vertices:
            return group

        fill = self._fill_for(coeff)
        corners = [self.to_canvas(v.point) for v in vertices]
        if len(corners) >= 3:
            coords = [c for p in _convex_order(corners) for c in p]
            group.append(draw.Lines(*coords, close=True, fill=fill, fill_opacity=0.25,
                                    stroke="none"))
        elif len(corners) == 2:
            (x1, y1), (x2, y2) = corners
            group.append(draw.Line(x1, y1, x2, y2, stroke=fill, stroke_width=3))
        else:
            (x, y), = corners
            group.append(draw.Circle(x, y, 4, fill=fill))

        drawn = set()
        for i, (form, w) in enumerate(zip(forms, weights)):
            on_line = [v.point for v in vertices if i in v.active_set]
            if len(on_line) < 2:
                if len(on_line) == 1 and len(vertices) == 1 and not wr.is_zero(w - wr.ONE):
                    x, y = self.to_canvas(on_line[0])
                    group.append(draw.Text(wr.format_poly(w), 10, x + 6, y - 6,
                                           fill=self.theme.text_secondary))
                continue
            key = form.canonical()
            if key in drawn:
                continue
            drawn.add(key)
            (x1, y1), (x2, y2) = self.to_canvas(on_line[0]), self.to_canvas(on_line[-1])
            group.append(draw.Line(x1, y1, x2, y2, stroke=self.theme.facet_stroke,
                                   stroke_width=1.5))
            if not wr.is_zero(w - wr.ONE):
                group.append(draw.Text(wr.format_poly(w), 10, (x1 + x2) / 2 + 4,
                                       (y1 + y2) / 2 - 4, fill=self.theme.text_secondary,
                                       font_family="monospace"))
        return group


def _title(term: Term) -> str:
    coeff = wr.format_poly(term.coeff)
    if coeff == "1":
        return term.label
    if coeff == "-1":
        return f"−{term.label}"
    return f"({coeff})·{term.label}"


def render_decomposition(result: DecompositionResult, filepath: Optional[str] = None,
                         panel_size: Optional[int] = None, columns: Optional[int] = None,
                         theme: Theme = DEFAULT_THEME) -> str:
    """
    渲染分解结果

    Args:
        result: 分解结果
        filepath: 如果指定，将 SVG 保存到文件
        panel_size: 面板边长（像素）
        columns: 每行面板数

    Returns:
        SVG 文本

    Raises:
        InputError: 维数大于 2
    """
    wp = result.polytope
    if wp.dim > 2:
        raise InputError(f"只能渲染一维或二维多胞形（当前 {wp.dim} 维），高维投影不在支持范围内")
    size = panel_size or GramcalConfig.SVG_PANEL_SIZE
    columns = columns or GramcalConfig.SVG_COLUMNS

    window = window_of(wp)
    renderer = PanelRenderer(window, size, theme)
    panels = [renderer.render(wp, "P", wr.ONE)]
    panels.extend(renderer.render(t.body, _title(t), t.coeff) for t in result.terms.terms)

    rows = math.ceil(len(panels) / columns)
    width = size * min(columns, len(panels))
    height = size * rows
    d = draw.Drawing(width, height)
    d.append(draw.Rectangle(0, 0, width, height, fill=theme.background))
    for k, panel in enumerate(panels):
        row, col = divmod(k, columns)
        wrapper = draw.Group(transform=f"translate({col * size},{row * size})")
        wrapper.append(panel)
        d.append(wrapper)

    if filepath:
        d.save_svg(filepath)
    return d.as_svg()
