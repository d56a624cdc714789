"""
命令行：文件格式、JSON 报告、文本摘要、SVG 与各个子命令
"""

from gramcal.cli.polytope_file import (
    PolytopeFile,
    format_polytope_file,
    parse_polytope_text,
    polytope_file_of,
    read_polytope_file,
)
from gramcal.cli.report import build_report, load_report, read_report, write_report
from gramcal.cli.summary import generate_summary
from gramcal.cli.svg_render import render_decomposition

__all__ = [
    'PolytopeFile', 'format_polytope_file', 'parse_polytope_text', 'polytope_file_of',
    'read_polytope_file',
    'build_report', 'load_report', 'read_report', 'write_report',
    'generate_summary', 'render_decomposition',
]
