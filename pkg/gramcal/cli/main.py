"""
gramcal 命令行入口

    gramcal decompose <file> --mode bg|faces|brion|polar [--xi 1,2] [--out report.json]
    gramcal lattice-sum <file> --box 0:1,0:1
    gramcal render <file> --mode bg --out fig.svg
    gramcal info <file>
    gramcal verify <report.json>

退出码：0 验证通过，1 验证失败，2 输入或几何错误
"""

import argparse
import sys
from typing import List, Optional

from gramcal import __version__
from gramcal.cli import commands
from gramcal.config import GramcalConfig
from gramcal.decomp.registry import DecompositionRegistry
from gramcal.errors import CapExceededError, ChopError, GeometryError, InputError

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_ERROR = 2


def _add_verify_options(parser: argparse.ArgumentParser):
    parser.add_argument('--cell-cap', type=int, default=None,
                        help=f'胞腔模式的超平面上限（默认 {GramcalConfig.CELL_CAP}）')
    parser.add_argument('--fallback-samples', type=int, default=None,
                        help='超过上限时改用随机点检验的试验次数（默认不回退）')
    parser.add_argument('--seed', type=int, default=None,
                        help=f'随机点检验种子（默认 {GramcalConfig.SEED}）')


def _add_mode_options(parser: argparse.ArgumentParser):
    parser.add_argument('--mode', type=str, default='bg', choices=DecompositionRegistry.list_modes(),
                        help='分解模式（默认 bg）')
    parser.add_argument('--xi', type=str, default=None,
                        help='polar 模式的极化向量，如 1,2（省略时自动选取）')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='gramcal', description='加权 Brianchon-Gram 分解与精确验证工具')
    parser.add_argument('--version', action='version', version=f'gramcal {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', default=GramcalConfig.VERBOSE,
                        help='打印胞腔枚举等过程信息')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('decompose', help='构造分解并验证')
    p.add_argument('file', help='多胞形文件')
    _add_mode_options(p)
    p.add_argument('--out', type=str, default=None, help='JSON 报告输出路径')
    p.add_argument('--summary', type=str, default=None, help='文本摘要输出路径')
    _add_verify_options(p)
    p.set_defaults(func=commands.cmd_decompose)

    p = sub.add_parser('lattice-sum', help='盒子内整点的加权和（直接求和与分解求和对照）')
    p.add_argument('file', help='多胞形文件')
    p.add_argument('--box', type=str, required=True, help='每个坐标的范围，如 0:1,0:1')
    p.set_defaults(func=commands.cmd_lattice_sum)

    p = sub.add_parser('render', help='一维/二维分解的 SVG 面板图')
    p.add_argument('file', help='多胞形文件')
    _add_mode_options(p)
    p.add_argument('--out', type=str, required=True, help='SVG 输出路径')
    _add_verify_options(p)
    p.set_defaults(func=commands.cmd_render)

    p = sub.add_parser('info', help='面表、一般性类别与非简单顶点')
    p.add_argument('file', help='多胞形文件')
    p.set_defaults(func=commands.cmd_info)

    p = sub.add_parser('verify', help='重新验证 JSON 报告')
    p.add_argument('report', help='decompose --out 生成的报告')
    _add_verify_options(p)
    p.set_defaults(func=commands.cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChopError as e:
        print(f"❌ 截顶失败: {e}")
        for line in e.diagnostics:
            print(f"   {line}")
        return EXIT_ERROR
    except (InputError, GeometryError, CapExceededError) as e:
        print(f"❌ {e}")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
