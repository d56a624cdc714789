"""
文本验证摘要
"""

from typing import Optional, Sequence, Tuple

from gramcal.core.weights import format_poly
from gramcal.decomp.base import DecompositionResult
from gramcal.utils.file_lock import write_text_locked
from gramcal.verify.identity import Verdict, VerdictStatus

WIDTH = 60

_ICONS = {
    VerdictStatus.EQUAL: "✅",
    VerdictStatus.CONSISTENT: "⚠️ ",
    VerdictStatus.UNEQUAL: "❌",
}


def verdict_line(name: str, verdict: Verdict) -> str:
    icon = _ICONS[verdict.status]
    unit = "个胞腔" if verdict.mode == 'cells' else "个随机点"
    line = f"{icon} {name}: {verdict.status.value}（{verdict.mode}，{verdict.checked} {unit}）"
    if verdict.witness is not None:
        w = verdict.witness
        point = "(" + ", ".join(w.to_dict()['point']) + ")"
        line += f"\n     反例 x = {point}: 左边 {w.lhs} ≠ 右边 {w.rhs}"
    return line


def generate_summary(result: DecompositionResult, verdicts: Sequence[Tuple[str, Verdict]],
                     filepath: Optional[str] = None, max_terms: int = 40) -> str:
    """
    生成验证摘要

    Args:
        result: 分解结果
        verdicts: check_all 的输出
        filepath: 如果指定，将摘要保存到文件
        max_terms: 项列表最多显示多少行

    Returns:
        摘要文本
    """
    wp = result.polytope
    lines = []

    lines.append("=" * WIDTH)
    lines.append(f"gramcal 分解验证摘要 [{result.mode}]".center(WIDTH))
    lines.append("=" * WIDTH)
    lines.append("")

    lines.append("📐 多胞形")
    lines.append("-" * WIDTH)
    lines.append(f"维数: {wp.dim}")
    lines.append(f"半空间数: {len(wp.halfspaces)}")
    counts = result.lattice.counts()
    lines.append("面数: " + ", ".join(f"{k} 维 {counts[k]} 个" for k in sorted(counts)))
    lines.append(f"一般性: {result.genericity.kind.value}")
    if result.genericity.nonsimple_vertices:
        lines.append(f"非简单顶点: {len(result.genericity.nonsimple_vertices)} 个")
    lines.append(f"面权重: {', '.join(wp.weights.labels())}")
    lines.append("")

    lines.append(f"🧩 分解项（共 {len(result.terms)} 项）")
    lines.append("-" * WIDTH)
    for term in result.terms.terms[:max_terms]:
        lines.append(f"  {format_poly(term.coeff):>12}  ·  {term.label}")
    if len(result.terms) > max_terms:
        lines.append(f"  ... 其余 {len(result.terms) - max_terms} 项见 JSON 报告")
    lines.append("")

    if 'chop' in result.details:
        chop = result.details['chop']
        lines.append("✂️  截顶")
        lines.append("-" * WIDTH)
        lines.append(f"截去顶点数: {len(chop['chops'])}")
        lines.append(f"尝试次数: {chop['attempts']}")
        lines.append("")

    if 'polar' in result.details:
        polar = result.details['polar']
        lines.append("🧭 极分解")
        lines.append("-" * WIDTH)
        lines.append(f"ξ = ({', '.join(polar['xi'])})")
        for cone in polar['cones']:
            lines.append(f"  顶点 ({', '.join(cone['vertex'])}): 翻转 {cone['flip_count']} 条棱，"
                         f"符号 {cone['sign']:+d}")
        lines.append(f"分组覆盖全部面: {'是' if polar['groups_partition_faces'] else '否'}")
        lines.append("")

    lines.append("🔍 验证")
    lines.append("-" * WIDTH)
    for name, verdict in verdicts:
        lines.append(verdict_line(name, verdict))
    lines.append("")

    lines.append("=" * WIDTH)
    if all(v.is_equal for _, v in verdicts):
        lines.append("✅ 所有恒等式精确成立")
    elif all(v.passed for _, v in verdicts):
        lines.append("⚠️  随机回退模式未发现反例（不是证明）")
    else:
        failed = sum(1 for _, v in verdicts if not v.passed)
        lines.append(f"❌ {failed} 个恒等式不成立")
    lines.append("=" * WIDTH)

    text = "\n".join(lines)
    if filepath:
        write_text_locked(filepath, text + "\n")
    return text
