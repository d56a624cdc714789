"""
分解模式抽象类
定义所有分解模式的统一接口和参数管理
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from gramcal.errors import InputError
from gramcal.indicators.formal_sum import FormalSum
from gramcal.indicators.weighted import WeightedPolyhedron
from gramcal.polyhedra.faces import FaceLattice, GenericityReport

# (名字, 左边, 右边)
Check = Tuple[str, FormalSum, FormalSum]


@dataclass
class DecompositionResult:
    """
    一次分解的结果

    terms 是输出的形式和；checks 是需要 verify 判定的恒等式，第一个是主恒等式 terms = 1^w_P
    """

    mode: str
    polytope: WeightedPolyhedron
    lattice: FaceLattice
    genericity: GenericityReport
    terms: FormalSum
    target: FormalSum
    checks: List[Check] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def main_check(self) -> Check:
        return self.checks[0]


class BaseDecomposition(ABC):
    """分解模式基类，所有模式必须继承此类"""

    # 子类需要定义 PARAMETERS 字典
    PARAMETERS: Dict[str, Dict[str, Any]] = {}

    def __init__(self, **kwargs):
        """
        初始化

        Args:
            **kwargs: 模式参数，会覆盖默认值
        """
        self.params = {name: spec.get('default') for name, spec in self.PARAMETERS.items()}
        if kwargs:
            self.set_parameters(kwargs)
        self.validate_parameters()

    def validate_parameters(self):
        """验证参数的有效性"""
        for name, value in self.params.items():
            if name not in self.PARAMETERS:
                raise InputError(f"未知参数: {name}")
            spec = self.PARAMETERS[name]
            expected = spec.get('type')
            if value is None or expected is None or isinstance(value, expected):
                continue
            try:
                self.params[name] = expected(value)
            except (ValueError, TypeError):
                raise InputError(
                    f"参数 {name} 类型错误: 期望 {expected.__name__}, 得到 {type(value).__name__}"
                )

    def set_parameters(self, params: Dict[str, Any]):
        for name, value in params.items():
            if name not in self.PARAMETERS:
                raise InputError(f"未知参数: {name}")
            self.params[name] = value
        self.validate_parameters()

    def get_parameters(self) -> Dict[str, Any]:
        return self.params.copy()

    def get_parameter_info(self) -> Dict[str, Dict[str, Any]]:
        """参数说明（info 命令显示）"""
        return {
            name: {
                'value': self.params[name],
                'default': spec.get('default'),
                'description': spec.get('description', ''),
            }
            for name, spec in self.PARAMETERS.items()
        }

    @abstractmethod
    def decompose(self, wp: WeightedPolyhedron,
                  lattice: Optional[FaceLattice] = None) -> DecompositionResult:
        """
        构造分解

        Args:
            wp: 加权多胞形
            lattice: 预先算好的面格

        Returns:
            DecompositionResult（尚未验证）
        """

    def get_name(self) -> str:
        return self.__class__.__name__

    def get_description(self) -> str:
        return f"{self.get_name()} 分解"

    def __repr__(self) -> str:
        return f"{self.get_name()}({self.params})"
