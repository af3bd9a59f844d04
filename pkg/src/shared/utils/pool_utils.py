"""
并行工具
按输入顺序返回结果的进程池映射
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar('T')
R = TypeVar('R')


def ordered_map(func: Callable[[T], R], items: Iterable[T], workers: int = 1, chunksize: int = 1) -> List[R]:
    """
    对每个元素调用 func，结果顺序与输入一致

    Args:
        func: 模块级可 pickle 的函数
        items: 输入序列
        workers: 进程数；<= 1 时在当前进程内顺序执行
        chunksize: 每次派发给子进程的元素个数

    Returns:
        结果列表
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
