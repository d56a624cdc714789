"""
异常层级
验证失败不是异常（见 verify.identity.Verdict），这里只放输入与几何错误
"""

from typing import Optional


class GramcalError(Exception):
    """gramcal 所有异常的基类"""


class InputError(GramcalError, ValueError):
    """输入错误：解析失败、维度不匹配、未知不定元等"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"第 {line} 行: {message}"
        super().__init__(message)


class GeometryError(GramcalError, ValueError):
    """几何前提不满足：非满维、相对内部为空、面数超限等"""


class GenericityError(GeometryError):
    """多面体的一般性类别不受支持（例如存在正维数的非一般面）"""


class PolarizationError(GeometryError):
    """ξ 不是极化向量（在某条棱上为常数）"""


class ChopError(GeometryError):
    """截顶点重试次数耗尽"""

    def __init__(self, message: str, diagnostics: Optional[list] = None):
        self.diagnostics = diagnostics or []
        super().__init__(message)


class CapExceededError(GramcalError):
    """超平面数超过胞腔上限且未允许随机回退"""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(
            f"去重后超平面数 {count} 超过胞腔上限 {cap}，请使用 --fallback-samples 随机回退模式"
        )
