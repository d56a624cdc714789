"""
gramcal 配置
所有参数都可以通过环境变量（或 .env 文件）覆盖
"""

import os
from typing import Dict, Any
from dotenv import load_dotenv

load_dotenv()

class GramcalConfig:
    """gramcal 全局配置"""

    # 精确胞腔模式允许的最大超平面数（3^12 个符号向量，带剪枝）
    CELL_CAP = int(os.getenv("GRAMCAL_CELL_CAP", "12"))

    # 面格按子集闭包枚举，指数复杂度
    MAX_FACETS = int(os.getenv("GRAMCAL_MAX_FACETS", "16"))

    # 随机回退模式
    FALLBACK_TRIALS = int(os.getenv("GRAMCAL_FALLBACK_TRIALS", "1000"))
    SEED = int(os.getenv("GRAMCAL_SEED", "1"))

    # 截去非简单顶点
    CHOP_MAX_RETRIES = int(os.getenv("GRAMCAL_CHOP_MAX_RETRIES", "8"))

    # SVG 面板
    SVG_PANEL_SIZE = int(os.getenv("GRAMCAL_SVG_PANEL_SIZE", "240"))
    SVG_COLUMNS = int(os.getenv("GRAMCAL_SVG_COLUMNS", "4"))

    VERBOSE = os.getenv("GRAMCAL_VERBOSE", "false").lower() == "true"

    @classmethod
    def to_dict(cls) -> Dict[str, Any]:
        """转换为字典（写入报告）"""
        return {
            'cell_cap': cls.CELL_CAP,
            'max_facets': cls.MAX_FACETS,
            'fallback_trials': cls.FALLBACK_TRIALS,
            'seed': cls.SEED,
            'chop_max_retries': cls.CHOP_MAX_RETRIES,
            'svg_panel_size': cls.SVG_PANEL_SIZE,
            'svg_columns': cls.SVG_COLUMNS,
            'verbose': cls.VERBOSE,
        }
