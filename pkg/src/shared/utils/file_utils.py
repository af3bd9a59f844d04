"""
文件操作工具
提供文本与 JSON 的读写，以及面向 stdout/--out 的输出
"""

import json
import sys
from pathlib import Path
from typing import Any, Optional, Union


def read_file(file_path: Union[str, Path], encoding: str = 'utf-8') -> str:
    """
    读取文本文件内容

    Raises:
        FileNotFoundError: 文件不存在
    """
    path = Path(file_path)
    if not path.exists():
        raise FileNotFoundError(f"file not found: {file_path}")
    return path.read_text(encoding=encoding)


def write_file(
    file_path: Union[str, Path],
    content: str,
    encoding: str = 'utf-8',
    create_dirs: bool = True
) -> None:
    """写入文本文件，统一使用 LF 换行"""
    path = Path(file_path)
    if create_dirs:
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding=encoding, newline='\n') as f:
        f.write(content)


def dumps_json(data: Any, indent: Optional[int] = 2) -> str:
    """稳定的 JSON 序列化：键排序，末尾换行"""
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def emit(content: str, out: Optional[Union[str, Path]] = None) -> None:
    """写到 --out 指定的文件，未指定时写到 stdout"""
    if out:
        write_file(out, content)
    else:
        sys.stdout.write(content)
        sys.stdout.flush()
