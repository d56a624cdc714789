"""
分解模式注册表
管理所有可用分解模式的注册和加载
"""

from typing import Dict, List, Optional, Type

from gramcal.decomp.base import BaseDecomposition
from gramcal.errors import InputError


class DecompositionRegistry:
    """分解模式注册表"""

    # 键为模式名称，值为模式类
    MODES: Dict[str, Type[BaseDecomposition]] = {}

    @classmethod
    def register(cls, name: str, mode_class: Type[BaseDecomposition]):
        """
        注册模式

        Args:
            name: 模式名称（如 'bg', 'polar'）
            mode_class: 模式类
        """
        if not issubclass(mode_class, BaseDecomposition):
            raise TypeError(f"{mode_class} 必须继承自 BaseDecomposition")
        cls.MODES[name] = mode_class

    @classmethod
    def get_mode(cls, name: str, params: Optional[Dict] = None) -> BaseDecomposition:
        """
        获取模式实例

        Args:
            name: 模式名称
            params: 模式参数

        Returns:
            模式实例

        Raises:
            InputError: 模式不存在
        """
        mode_class = cls.get_mode_class(name)
        return mode_class(**params) if params else mode_class()

    @classmethod
    def get_mode_class(cls, name: str) -> Type[BaseDecomposition]:
        if name not in cls.MODES:
            raise InputError(f"模式 '{name}' 不存在。可用模式: {cls.list_modes()}")
        return cls.MODES[name]

    @classmethod
    def list_modes(cls) -> List[str]:
        return list(cls.MODES.keys())

    @classmethod
    def get_mode_info(cls, name: str) -> Dict:
        instance = cls.get_mode_class(name)()
        return {
            'name': name,
            'class_name': instance.get_name(),
            'description': instance.get_description(),
            'parameters': instance.get_parameter_info(),
        }


def _register_all_modes():
    """注册所有模式"""
    from gramcal.decomp.modes import (
        BrianchonGramDecomposition,
        BrionDecomposition,
        FaceExpansionDecomposition,
        PolarDecomposition,
    )
    DecompositionRegistry.register('bg', BrianchonGramDecomposition)
    DecompositionRegistry.register('faces', FaceExpansionDecomposition)
    DecompositionRegistry.register('brion', BrionDecomposition)
    DecompositionRegistry.register('polar', PolarDecomposition)


# 在导入时自动注册
_register_all_modes()
