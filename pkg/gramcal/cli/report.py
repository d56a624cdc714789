"""
JSON 报告：项列表 + 每个恒等式的两边与判定结果

报告里只有规范字符串（有理数 p/q、分次字典序多项式），没有时间戳，重复运行输出一致
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gramcal import __version__
from gramcal.config import GramcalConfig
from gramcal.core import weights as wr
from gramcal.core.rational import AffineForm, format_rational, to_rational
from gramcal.decomp.base import DecompositionResult
from gramcal.errors import InputError
from gramcal.indicators.formal_sum import FormalSum, Term
from gramcal.indicators.weighted import WeightAssignment, WeightedPolyhedron
from gramcal.polyhedra.polyhedron import HPolyhedron
from gramcal.utils.file_lock import read_json_locked, write_json_locked
from gramcal.verify.identity import Verdict

REPORT_FORMAT = 1


def _form_to_list(form: AffineForm) -> List[str]:
    return [format_rational(a) for a in form.normal + (form.offset,)]


def _form_from_list(values: Sequence[str], dim: int) -> AffineForm:
    if len(values) != dim + 1:
        raise InputError(f"半空间需要 {dim + 1} 个数，得到 {len(values)}")
    numbers = [to_rational(str(v)) for v in values]
    return AffineForm(tuple(numbers[:-1]), numbers[-1])


def term_to_dict(term: Term) -> Dict[str, Any]:
    return {
        'coeff': wr.format_poly(term.coeff),
        'label': term.label,
        'halfspaces': [_form_to_list(f) for f in term.body.halfspaces],
        'facet_weights': list(term.body.weights.labels()),
    }


def term_from_dict(data: Dict[str, Any], dim: int) -> Term:
    try:
        forms = tuple(_form_from_list(h, dim) for h in data['halfspaces'])
        weights = tuple(wr.parse_poly(w) for w in data['facet_weights'])
        coeff = wr.parse_poly(data['coeff'])
    except KeyError as e:
        raise InputError(f"报告中的项缺少字段 {e}")
    body = WeightedPolyhedron(HPolyhedron(dim, forms), WeightAssignment(weights))
    return Term(coeff, body, data.get('label', ''))


def sum_to_list(s: FormalSum) -> List[Dict[str, Any]]:
    return [term_to_dict(t) for t in s.terms]


def sum_from_list(items: Sequence[Dict[str, Any]], dim: int) -> FormalSum:
    return FormalSum(dim, tuple(term_from_dict(item, dim) for item in items))


def build_report(result: DecompositionResult,
                 verdicts: Sequence[Tuple[str, Verdict]]) -> Dict[str, Any]:
    """
    组装报告

    Args:
        result: 分解结果
        verdicts: check_all 的输出，与 result.checks 一一对应

    Returns:
        可直接写成 JSON 的字典
    """
    wp = result.polytope
    main = verdicts[0][1]
    verification = {
        'mode': main.mode,
        'cells': main.checked,
        'verdict': main.status.value,
        'all_equal': all(v.is_equal for _, v in verdicts),
    }
    if main.witness is not None:
        verification['witness'] = main.witness.to_dict()

    checks = []
    for (name, lhs, rhs), (_, verdict) in zip(result.checks, verdicts):
        entry = {'name': name, **verdict.to_dict()}
        # 主恒等式两边就是 terms 与 target，不重复存放
        if name != 'main':
            entry['lhs'] = sum_to_list(lhs)
            entry['rhs'] = sum_to_list(rhs)
        checks.append(entry)

    return {
        'format': REPORT_FORMAT,
        'gramcal_version': __version__,
        'mode': result.mode,
        'dim': wp.dim,
        'polytope': {
            'halfspaces': [_form_to_list(f) for f in wp.halfspaces],
            'weights': list(wp.weights.labels()),
        },
        'genericity': result.genericity.to_dict(),
        'faces': len(result.lattice.faces),
        'terms': sum_to_list(result.terms),
        'target': sum_to_list(result.target),
        'verification': verification,
        'checks': checks,
        'details': result.details,
        'config': GramcalConfig.to_dict(),
    }


@dataclass
class LoadedReport:
    """重新读入的报告：可以不依赖原多胞形文件再次验证"""

    mode: str
    dim: int
    terms: FormalSum
    target: FormalSum
    checks: List[Tuple[str, FormalSum, FormalSum]] = field(default_factory=list)
    recorded: Dict[str, str] = field(default_factory=dict)


def load_report(data: Dict[str, Any]) -> LoadedReport:
    """从报告字典恢复所有形式和"""
    try:
        dim = int(data['dim'])
        terms = sum_from_list(data['terms'], dim)
        target = sum_from_list(data['target'], dim)
        report = LoadedReport(data['mode'], dim, terms, target)
        for entry in data.get('checks', []):
            name = entry['name']
            if name == 'main':
                report.checks.append((name, terms, target))
            else:
                report.checks.append((name, sum_from_list(entry['lhs'], dim),
                                      sum_from_list(entry['rhs'], dim)))
            report.recorded[name] = entry['verdict']
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, InputError):
            raise
        raise InputError(f"报告格式错误: {e}")
    if not report.checks:
        report.checks.append(('main', terms, target))
    return report


def write_report(path: str, report: Dict[str, Any]) -> None:
    write_json_locked(path, report)


def read_report(path: str) -> LoadedReport:
    try:
        data = read_json_locked(path)
    except OSError as e:
        raise InputError(f"无法读取报告 {path}: {e}")
    except ValueError as e:
        raise InputError(f"报告不是合法的 JSON: {e}")
    return load_report(data)


def recorded_verdict(report: LoadedReport, name: str) -> Optional[str]:
    return report.recorded.get(name)
