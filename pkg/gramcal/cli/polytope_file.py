"""
多胞形文件格式

    # 注释
    dim 2
    facet 1 0 0
    facet 0 1 0 weight=q
    facet -1 -1 1 weight=1/2

每行 facet 给出 u_1 ... u_d mu，表示 <u, x> + mu >= 0；
weight 为有理常数或不定元名，省略时为 q<序号>（从 1 开始）
"""

from dataclasses import dataclass
from typing import List, Tuple

from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm, format_rational, to_rational
from gramcal.errors import InputError
from gramcal.indicators.weighted import WeightedPolyhedron


@dataclass(frozen=True)
class PolytopeFile:
    dim: int
    forms: Tuple[AffineForm, ...]
    weights: Tuple[wr.Poly, ...]
    explicit_weights: bool = False

    def to_weighted(self) -> WeightedPolyhedron:
        """构造无冗余的加权多胞形（冗余半空间连同权重一起丢弃）"""
        return WeightedPolyhedron.from_forms(list(self.forms), self.dim, list(self.weights))


def parse_polytope_text(text: str) -> PolytopeFile:
    """
    解析多胞形文件内容

    Raises:
        InputError: 带行号的解析错误
    """
    dim = None
    forms: List[AffineForm] = []
    weights: List[wr.Poly] = []
    explicit = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive, args = tokens[0], tokens[1:]

        if directive == 'dim':
            if dim is not None:
                raise InputError("重复的 dim 指令", line=lineno)
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise InputError(f"dim 需要一个正整数，得到: {' '.join(args)}", line=lineno)
            dim = int(args[0])
            continue

        if directive != 'facet':
            raise InputError(f"未知指令: {directive}", line=lineno)
        if dim is None:
            raise InputError("facet 之前必须先给出 dim", line=lineno)

        weight = None
        if args and args[-1].startswith('weight='):
            weight_text = args.pop()[len('weight='):]
            try:
                weight = wr.parse_weight(weight_text)
            except InputError as e:
                raise InputError(str(e), line=lineno)
            explicit = True
        if len(args) != dim + 1:
            raise InputError(f"facet 需要 {dim + 1} 个数（{dim} 个法向分量 + 常数项），得到 {len(args)}",
                             line=lineno)
        try:
            values = [to_rational(a) for a in args]
        except InputError as e:
            raise InputError(str(e), line=lineno)

        forms.append(AffineForm(tuple(values[:-1]), values[-1]))
        weights.append(weight if weight is not None else wr.facet_indeterminate(len(forms) - 1))

    if dim is None:
        raise InputError("文件中没有 dim 指令")
    if not forms:
        raise InputError("文件中没有 facet")
    return PolytopeFile(dim, tuple(forms), tuple(weights), explicit)


def read_polytope_file(path: str) -> PolytopeFile:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return parse_polytope_text(f.read())
    except OSError as e:
        raise InputError(f"无法读取 {path}: {e}")


def format_polytope_file(pf: PolytopeFile) -> str:
    """规范输出：每行都带 weight=，再解析再输出不变"""
    lines = [f"dim {pf.dim}"]
    for form, w in zip(pf.forms, pf.weights):
        numbers = ' '.join(format_rational(a) for a in form.normal + (form.offset,))
        lines.append(f"facet {numbers} weight={wr.format_poly(w)}")
    return '\n'.join(lines) + '\n'


def polytope_file_of(wp: WeightedPolyhedron) -> PolytopeFile:
    return PolytopeFile(wp.dim, wp.halfspaces, wp.weights.weights, True)
