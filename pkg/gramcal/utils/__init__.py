"""
工具函数
"""

from gramcal.utils.file_lock import read_json_locked, write_json_locked, write_text_locked

__all__ = ['read_json_locked', 'write_json_locked', 'write_text_locked']
