"""
图核心模块
不可变图、BFS 距离矩阵、直径与基本谓词，以及边表/DOT 编解码
"""

from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .io import read_edge_list, write_edge_list, to_dot

__all__ = list(_core_all) + ['read_edge_list', 'write_edge_list', 'to_dot']
