"""
权重环：有理系数多元多项式

权重是展开后的 sympy 表达式，不定元为 sympy.Symbol（q1..qN, y 等）。
对不定元做多项式恒等验证，蕴含了对任意复数取值都成立。
"""

import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Set, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from gramcal.core.rational import RationalLike, to_rational
from gramcal.errors import InputError

Poly = sympy.Expr
WeightLike = Union[int, Fraction, str, sympy.Expr]

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_CONSTANT = re.compile(r"^[+-]?\d+(/\d+)?$")


def indeterminate(name: str) -> sympy.Symbol:
    """按名字取不定元"""
    if not isinstance(name, str) or not _NAME.match(name):
        raise InputError(f"非法的不定元名: {name!r}")
    return sympy.Symbol(name)


def facet_indeterminate(index: int) -> sympy.Symbol:
    """第 index 个面（从 0 开始）的默认权重 q{index+1}"""
    return sympy.Symbol(f"q{index + 1}")


def from_rational(value: RationalLike) -> Poly:
    value = to_rational(value)
    return sympy.Rational(value.numerator, value.denominator)


def to_weight(value: WeightLike) -> Poly:
    """
    转换为权重环元素

    Args:
        value: 整数、Fraction、多项式字符串或 sympy 表达式

    Returns:
        展开后的多项式
    """
    if isinstance(value, sympy.Expr):
        expr = value
    elif isinstance(value, str):
        return parse_poly(value)
    else:
        expr = from_rational(value)
    expr = sympy.expand(expr)
    _require_polynomial(expr)
    return expr


def parse_weight(text: str) -> Poly:
    """面文件中的权重：有理常数或不定元名"""
    text = text.strip()
    if _CONSTANT.match(text):
        return from_rational(text)
    return indeterminate(text)


def parse_poly(text: str) -> Poly:
    """解析报告中的规范多项式字符串"""
    text = text.strip()
    if not text:
        raise InputError("空的多项式表达式")
    names = set(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", text))
    local_dict = {name: sympy.Symbol(name) for name in names}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=standard_transformations,
                          evaluate=True)
    except (SyntaxError, TypeError, sympy.SympifyError) as e:
        raise InputError(f"无法解析多项式 {text!r}: {e}")
    expr = sympy.expand(expr)
    _require_polynomial(expr)
    return expr


def _require_polynomial(expr: sympy.Expr) -> None:
    symbols = sorted(expr.free_symbols, key=str)
    if not expr.is_polynomial(*symbols):
        raise InputError(f"不是多项式（权重环只含多项式）: {expr}")
    if symbols:
        coeffs = sympy.Poly(expr, *symbols).coeffs()
    else:
        coeffs = [expr]
    for c in coeffs:
        if not c.is_Rational:
            raise InputError(f"系数不是有理数: {c}")


def product(factors: Iterable[Poly]) -> Poly:
    return sympy.Mul(*factors)


def is_zero(p: Poly) -> bool:
    return sympy.expand(p) == 0


def names_of(p: Poly) -> Set[str]:
    return {str(s) for s in p.free_symbols}


def format_poly(p: Poly) -> str:
    """规范打印：分次字典序"""
    return sympy.sstr(sympy.expand(p), order='grlex')


def as_rational(p: Poly) -> Fraction:
    """常数多项式转为 Fraction"""
    p = sympy.expand(p)
    if p.free_symbols or not p.is_Rational:
        raise InputError(f"不是有理常数: {p}")
    return Fraction(int(p.p), int(p.q))


def poly_substitute(p: Poly, assignment: Mapping[str, WeightLike],
                    known: Optional[Iterable[str]] = None) -> Union[Poly, Fraction]:
    """
    代入（部分或全部）不定元

    p 中没有出现的名字不起作用

    Args:
        p: 多项式
        assignment: 不定元名 -> 有理数或多项式
        known: 调用方上下文中的全部不定元名；给出时其余名字视为未知

    Returns:
        全部代入时返回 Fraction，否则返回多项式

    Raises:
        InputError: 名字不是合法不定元，或不在 known 中
    """
    known = None if known is None else {str(n) for n in known}
    mapping = {}
    for name, value in assignment.items():
        symbol = indeterminate(str(name))
        if known is not None and symbol.name not in known:
            raise InputError(f"未知的不定元: {name}")
        mapping[symbol] = to_weight(value)
    result = sympy.expand(p.subs(mapping, simultaneous=True)) if mapping else sympy.expand(p)
    if not result.free_symbols:
        return as_rational(result)
    return result


def evaluate(p: Poly, assignment: Mapping[str, RationalLike]) -> Fraction:
    """全部代入为有理数"""
    result = poly_substitute(p, assignment)
    if not isinstance(result, Fraction):
        raise InputError(f"代入不完整，剩余不定元: {sorted(names_of(result))}")
    return result


def evaluate_complex(p: Poly, assignment: Mapping[str, Tuple[RationalLike, RationalLike]]
                     ) -> Tuple[Fraction, Fraction]:
    """
    Gaussian 有理数求值：每个不定元取 a + b·i

    Returns:
        (实部, 虚部)，都是精确有理数
    """
    mapping = {}
    for name, (re_part, im_part) in assignment.items():
        mapping[indeterminate(name)] = from_rational(re_part) + from_rational(im_part) * sympy.I
    value = sympy.expand(p.subs(mapping, simultaneous=True))
    if value.free_symbols:
        raise InputError(f"代入不完整，剩余不定元: {sorted(names_of(value))}")
    real, imag = value.as_real_imag()
    return as_rational(real), as_rational(imag)


def reciprocal_shift(y0: RationalLike) -> Fraction:
    """q = 1/(1+y) 只作为求值使用：给定有理数 y0 返回 1/(1+y0)"""
    y0 = to_rational(y0)
    if y0 == -1:
        raise InputError("y0 = -1 时 1/(1+y) 无定义")
    return 1 / (1 + y0)
