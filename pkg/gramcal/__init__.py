"""
gramcal - 加权 Brianchon-Gram / Brion / 极分解的精确构造与验证
所有系数与权重都在精确有理数与多项式环中计算
"""

__version__ = "0.3.0"
