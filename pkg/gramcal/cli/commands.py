"""
命令实现：decompose, lattice-sum, render, info, verify

每个命令返回退出码；异常交给 main 统一处理
"""

import math
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

from gramcal.core import weights as wr
from gramcal.core.rational import format_rational, to_rational
from gramcal.decomp.brianchon_gram import brianchon_gram
from gramcal.decomp.registry import DecompositionRegistry
from gramcal.errors import InputError
from gramcal.indicators.formal_sum import fs_evaluate
from gramcal.indicators.weighted import WeightedPolyhedron, weight_at
from gramcal.polyhedra.faces import classify_genericity, enumerate_faces
from gramcal.cli.polytope_file import PolytopeFile, read_polytope_file
from gramcal.cli.report import build_report, read_report, recorded_verdict, write_report
from gramcal.cli.summary import generate_summary, verdict_line
from gramcal.cli.svg_render import render_decomposition
from gramcal.verify.identity import check_all


def parse_xi(text: Optional[str]) -> Optional[Tuple[Fraction, ...]]:
    """'1,2' -> (1, 2)"""
    if text is None:
        return None
    parts = [p.strip() for p in text.split(',')]
    if not all(parts):
        raise InputError(f"无法解析 ξ: {text}")
    return tuple(to_rational(p) for p in parts)


def parse_box(text: str, dim: int) -> List[Tuple[Fraction, Fraction]]:
    """
    解析盒子 'a1:b1,a2:b2,...'

    Raises:
        InputError: 格式错误、维数不符或无界
    """
    box = []
    for part in text.split(','):
        bounds = part.strip().split(':')
        if len(bounds) != 2:
            raise InputError(f"盒子每个坐标需要 a:b 形式，得到: {part}")
        if any(b.strip().lower() in ('', 'inf', '-inf', '+inf') for b in bounds):
            raise InputError(f"盒子必须有界，得到: {part}")
        lo, hi = (to_rational(b.strip()) for b in bounds)
        if lo > hi:
            raise InputError(f"盒子下界大于上界: {part}")
        box.append((lo, hi))
    if len(box) != dim:
        raise InputError(f"盒子维数 {len(box)} 与多胞形维数 {dim} 不一致")
    return box


def lattice_points(box: Sequence[Tuple[Fraction, Fraction]]):
    ranges = [range(math.ceil(lo), math.floor(hi) + 1) for lo, hi in box]
    for x in product(*ranges):
        yield tuple(Fraction(a) for a in x)


def lattice_sum(wp: WeightedPolyhedron, box) -> Tuple[wr.Poly, wr.Poly]:
    """
    盒子内整点上的加权和

    Returns:
        (直接求和, Brianchon-Gram 形式和逐点求值后的和)
    """
    bg = brianchon_gram(wp, enumerate_faces(wp.polyhedron))
    direct, via_bg = wr.ZERO, wr.ZERO
    for x in lattice_points(box):
        direct += weight_at(wp, x)
        via_bg += fs_evaluate(bg, x)
    return wr.to_weight(direct), wr.to_weight(via_bg)


def load_for_mode(pf: PolytopeFile, mode: str) -> WeightedPolyhedron:
    """polar 模式：文件没写权重时统一取 q"""
    wp = pf.to_weighted()
    if mode == 'polar' and not pf.explicit_weights:
        wp = wp.with_uniform_weight('q')
    return wp


def run_decomposition(wp: WeightedPolyhedron, mode: str, xi=None, cell_cap=None,
                      fallback_samples=None, seed=None, verbose=False):
    """构造并验证，返回 (DecompositionResult, verdicts)"""
    params = {'xi': xi} if mode == 'polar' and xi is not None else {}
    if mode != 'polar' and xi is not None:
        raise InputError("--xi 只适用于 polar 模式")
    result = DecompositionRegistry.get_mode(mode, params).decompose(wp)
    verdicts = check_all(result.checks, cell_cap=cell_cap, fallback_trials=fallback_samples,
                         seed=seed, verbose=verbose)
    return result, verdicts


def _exit_code(verdicts) -> int:
    return 0 if all(v.passed for _, v in verdicts) else 1


def cmd_decompose(args) -> int:
    pf = read_polytope_file(args.file)
    wp = load_for_mode(pf, args.mode)
    print(f"🚀 {args.mode} 分解: {args.file}（{wp.dim} 维，{len(wp.halfspaces)} 个半空间）")

    result, verdicts = run_decomposition(
        wp, args.mode, xi=parse_xi(args.xi), cell_cap=args.cell_cap,
        fallback_samples=args.fallback_samples, seed=args.seed, verbose=args.verbose,
    )
    print(f"📊 共 {len(result.terms)} 项，{len(result.checks)} 个恒等式待验证")

    if args.out:
        write_report(args.out, build_report(result, verdicts))
        print(f"✅ 报告已保存至: {args.out}")

    text = generate_summary(result, verdicts, filepath=args.summary)
    print("\n" + text)
    if args.summary:
        print(f"✅ 摘要已保存至: {args.summary}")
    return _exit_code(verdicts)


def cmd_lattice_sum(args) -> int:
    pf = read_polytope_file(args.file)
    wp = pf.to_weighted()
    box = parse_box(args.box, wp.dim)
    direct, via_bg = lattice_sum(wp, box)
    print(f"📊 直接求和: {wr.format_poly(direct)}")
    print(f"📊 Brianchon-Gram 求和: {wr.format_poly(via_bg)}")
    if not wr.is_zero(direct - via_bg):
        print("❌ 两种求和不一致")
        return 1
    print("✅ 两种求和一致")
    return 0


def cmd_render(args) -> int:
    pf = read_polytope_file(args.file)
    wp = load_for_mode(pf, args.mode)
    if wp.dim > 2:
        raise InputError(f"只能渲染一维或二维多胞形（当前 {wp.dim} 维），高维投影不在支持范围内")
    result, verdicts = run_decomposition(
        wp, args.mode, xi=parse_xi(args.xi), cell_cap=args.cell_cap,
        fallback_samples=args.fallback_samples, seed=args.seed, verbose=args.verbose,
    )
    render_decomposition(result, filepath=args.out)
    print(f"✅ {len(result.terms) + 1} 个面板已保存至: {args.out}")
    for name, verdict in verdicts:
        print(verdict_line(name, verdict))
    return _exit_code(verdicts)


def face_table(wp: WeightedPolyhedron) -> str:
    """面表：按 (维数, 活跃集) 排序"""
    lattice = enumerate_faces(wp.polyhedron)
    report = classify_genericity(wp.polyhedron, lattice)
    lines = []
    lines.append("=" * 60)
    lines.append(f"{'面':<16}{'维数':>6}  {'顶点数':>6}  一般")
    lines.append("-" * 60)
    for face in lattice.faces:
        generic = "是" if face.is_generic(wp.dim) else "否"
        lines.append(f"{face.label():<16}{face.dim:>6}  {len(face.vertices):>6}  {generic}")
    lines.append("-" * 60)
    counts = lattice.counts()
    lines.append("f-向量: (" + ", ".join(str(counts.get(k, 0)) for k in range(wp.dim + 1)) + ")")
    lines.append(f"Euler 和: {lattice.euler_sum()}")
    lines.append(f"一般性: {report.kind.value}")
    for v in report.nonsimple_vertices:
        point = ", ".join(format_rational(a) for a in v.point)
        lines.append(f"  非简单顶点 ({point}) 落在 {len(v.active_set)} 个面上")
    lines.append("=" * 60)
    return "\n".join(lines)


def cmd_info(args) -> int:
    pf = read_polytope_file(args.file)
    wp = pf.to_weighted()
    print(f"📐 {args.file}: {wp.dim} 维，{len(wp.halfspaces)} 个面，"
          f"权重 {', '.join(wp.weights.labels())}")
    print(face_table(wp))
    return 0


def cmd_verify(args) -> int:
    report = read_report(args.report)
    print(f"🔍 重新验证 {args.report}（{report.mode}，{len(report.checks)} 个恒等式）")
    verdicts = check_all(report.checks, cell_cap=args.cell_cap,
                         fallback_trials=args.fallback_samples, seed=args.seed,
                         verbose=args.verbose)
    for name, verdict in verdicts:
        print(verdict_line(name, verdict))
        recorded = recorded_verdict(report, name)
        if recorded is not None and recorded != verdict.status.value:
            print(f"⚠️  {name}: 报告记录为 {recorded}，重新验证为 {verdict.status.value}")
    return _exit_code(verdicts)
