"""
精确有理数、向量与仿射形式
几何中的所有标量都是 fractions.Fraction（规范形式由 Fraction 自身保证）
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

from gramcal.errors import InputError

Point = Tuple[Fraction, ...]
RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """
    转换为精确有理数

    Args:
        value: 整数、Fraction 或 "p/q" 形式的字符串

    Returns:
        Fraction
    """
    if isinstance(value, bool):
        raise InputError(f"不是有理数: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"无法解析有理数: {value!r}")
    # 浮点数会悄悄引入二进制误差
    raise InputError(f"只接受精确有理数，得到 {type(value).__name__}: {value!r}")


def to_point(values: Iterable[RationalLike]) -> Point:
    return tuple(to_rational(v) for v in values)


def format_rational(value: Fraction) -> str:
    """整数不带分母，其余输出 p/q"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Point:
    return tuple(c * a for a in u)


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def primitive_integer_row(entries: Sequence[Fraction]) -> Tuple[int, ...]:
    """
    按正因子缩放为本原整数向量（方向不变）

    先乘分母的最小公倍数，再除以分子的最大公约数
    """
    denominators = [e.denominator for e in entries]
    scale = lcm(*denominators) if denominators else 1
    ints = [int(e * scale) for e in entries]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


@dataclass(frozen=True)
class AffineForm:
    """仿射形式 x -> <normal, x> + offset，半空间约定为 form(x) >= 0"""

    normal: Tuple[Fraction, ...]
    offset: Fraction

    @classmethod
    def of(cls, normal: Iterable[RationalLike], offset: RationalLike) -> 'AffineForm':
        return cls(to_point(normal), to_rational(offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        if len(x) != len(self.normal):
            raise InputError(f"点的维数 {len(x)} 与仿射形式维数 {len(self.normal)} 不一致")
        return dot(self.normal, x) + self.offset

    def is_trivial(self) -> bool:
        """法向量为零"""
        return is_zero_vector(self.normal)

    def __neg__(self) -> 'AffineForm':
        return AffineForm(tuple(-a for a in self.normal), -self.offset)

    def shifted(self, delta: RationalLike) -> 'AffineForm':
        return AffineForm(self.normal, self.offset + to_rational(delta))

    def integer_row(self) -> Tuple[int, ...]:
        """本原整数系数 (normal..., offset)，与原形式同向"""
        return primitive_integer_row(self.normal + (self.offset,))

    def canonical(self) -> 'AffineForm':
        """
        超平面的规范代表：本原整数系数，第一个非零法向分量为正

        只描述超平面 {form = 0}，方向信息被丢弃
        """
        row = self.integer_row()
        for a in row[:-1]:
            if a != 0:
                if a < 0:
                    row = tuple(-b for b in row)
                break
        return AffineForm(tuple(Fraction(a) for a in row[:-1]), Fraction(row[-1]))

    def __str__(self) -> str:
        parts = []
        for k, a in enumerate(self.normal, start=1):
            if a == 0:
                continue
            sign = '-' if a < 0 else '+'
            mag = abs(a)
            coeff = '' if mag == 1 else format_rational(mag)
            parts.append(f"{sign} {coeff}x{k}")
        if self.offset != 0 or not parts:
            sign = '-' if self.offset < 0 else '+'
            parts.append(f"{sign} {format_rational(abs(self.offset))}")
        text = ' '.join(parts)
        if text.startswith('+ '):
            text = text[2:]
        elif text.startswith('- '):
            text = '-' + text[2:]
        return f"{text} >= 0"


def check_dimension(forms: Iterable[AffineForm], dim: int) -> None:
    for form in forms:
        if form.dim != dim:
            raise InputError(f"仿射形式维数 {form.dim} 与环境维数 {dim} 不一致")
