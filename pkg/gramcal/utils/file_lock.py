"""
报告文件读写（带 fcntl 文件锁）
"""
import fcntl
import json
import os
from typing import Any, Callable


def _locked(file_path: str, mode: str, lock_type: int, operation: Callable) -> Any:
    with open(file_path, mode, encoding='utf-8') as f:
        fcntl.flock(f.fileno(), lock_type)
        try:
            return operation(f)
        finally:
            fcntl.flock(f.fileno(), fcntl.LOCK_UN)


def _ensure_parent(file_path: str) -> None:
    parent = os.path.dirname(file_path)
    if parent:
        os.makedirs(parent, exist_ok=True)


def read_json_locked(file_path: str) -> Any:
    """
    使用共享锁读取 JSON 报告

    Args:
        file_path: 文件路径

    Returns:
        解析后的 JSON 数据
    """
    return _locked(file_path, 'r', fcntl.LOCK_SH, json.load)


def write_json_locked(file_path: str, data: Any) -> None:
    """使用排他锁写入 JSON（键顺序保持插入顺序，缩进 2）"""
    _ensure_parent(file_path)
    _locked(file_path, 'w', fcntl.LOCK_EX,
            lambda f: json.dump(data, f, ensure_ascii=False, indent=2))


def write_text_locked(file_path: str, text: str) -> None:
    """使用排他锁写入文本（摘要）"""
    _ensure_parent(file_path)
    _locked(file_path, 'w', fcntl.LOCK_EX, lambda f: f.write(text))
