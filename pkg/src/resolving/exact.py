"""
小规模精确求解：划分维数与度量维数

划分按限制增长串的字典序枚举，返回第一个分辨划分；
度量维数按子集大小递增、同大小内字典序搜索。
"""

from itertools import combinations, islice
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.graph import DistanceMatrix, Graph, distance_matrix, require_connected
from src.shared.exceptions import SizeGateError, ValidationError
from src.shared.utils.logger import get_logger
from .enum import LowerBoundReason
from .representation import block_minima
from .schema import Partition, PdCertificate

logger = get_logger(__name__)

DEFAULT_MAX_VERTICES = 16
# 每批向量化检查的划分数
BATCH_SIZE = 2048


def restricted_growth_strings(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    恰好 k 个块的限制增长串，字典序

    a_0 = 0，a_i <= max(a_0..a_{i-1}) + 1，且最终用满 0..k-1。
    """
    if n < 1 or k < 1 or k > n:
        return
    a = [0] * n

    def extend(i: int, top: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            if top == k - 1:
                yield tuple(a)
            return
        remaining = n - i
        for label in range(min(top + 1, k - 1) + 1):
            new_top = max(top, label)
            # 剩余位置必须足够打开尚未出现的块
            if (k - 1 - new_top) > remaining - 1:
                continue
            a[i] = label
            yield from extend(i + 1, new_top)

    yield from extend(1, 0)


def _gate(g: Graph, operation: str, max_vertices: int) -> None:
    if g.vertex_count > max_vertices:
        raise SizeGateError(operation, g.vertex_count, max_vertices)
    if g.vertex_count < 2:
        raise ValidationError(f"{operation} needs at least 2 vertices", field="graph", value=g.vertex_count)
    require_connected(g, operation)


def _distinct_rows(rows: np.ndarray, base: int) -> bool:
    if base ** rows.shape[1] >= 2 ** 62:
        return len({tuple(row) for row in rows.tolist()}) == rows.shape[0]
    # 距离 < base，按 base 进制编码成整数键
    weights = base ** np.arange(rows.shape[1], dtype=np.int64)
    keys = rows @ weights
    return len(set(keys.tolist())) == rows.shape[0]


def _resolving_rows(matrix: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    """
    一批划分（每行一个标签串）各自是否为分辨划分

    r(v) 的 k 个分量按 n+1 进制编码为一个整数键，行内排序后相邻相等即有冲突。
    """
    n = matrix.shape[0]
    base = n + 1
    if base ** k >= 2 ** 62:
        return np.array([_distinct_rows(block_minima(matrix, row, k), base) for row in labels], dtype=bool)
    keys = np.zeros(labels.shape, dtype=np.int64)
    for block in range(k):
        inside = labels == block
        # d(v, S_block) = min_{w in S_block} d(v, w)，批量 (b, n, n) 取最小
        to_block = np.where(inside[:, None, :], matrix[None, :, :], base).min(axis=2)
        keys = keys * base + to_block
    keys.sort(axis=1)
    return ~(keys[:, 1:] == keys[:, :-1]).any(axis=1)


def partition_dimension_exact(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    k_max: Optional[int] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[PdCertificate]:
    """
    最小的 k <= k_max 使存在分辨 k-划分

    Returns:
        PdCertificate；k_max 以内不存在时返回 None

    Raises:
        SizeGateError: n 超过 max_vertices
        ValidationError: k_max < 1 或 n < 2
        DisconnectedGraphError: 图不连通
    """
    _gate(g, "partition_dimension_exact", max_vertices)
    n = g.vertex_count
    k_max = n if k_max is None else k_max
    if k_max < 1:
        raise ValidationError("k_max must be at least 1", field="k_max", value=k_max)

    dm = dm if dm is not None else distance_matrix(g)
    matrix = dm.matrix
    for k in range(1, min(k_max, n) + 1):
        checked = 0
        strings = restricted_growth_strings(n, k)
        while True:
            chunk = list(islice(strings, BATCH_SIZE))
            if not chunk:
                break
            hits = np.flatnonzero(_resolving_rows(matrix, np.array(chunk, dtype=np.int64), k))
            if hits.size:
                checked += int(hits[0]) + 1
                witness = Partition.from_labels(chunk[hits[0]])
                logger.debug("resolving partition found", k=k, checked=checked)
                return PdCertificate(
                    value=k, lower_bound_reason=LowerBoundReason.EXHAUSTIVE_NO_K, witness=witness
                )
            checked += len(chunk)
        logger.debug("no resolving partition", k=k, checked=checked)
    return None


def minimum_resolving_set(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES
) -> List[int]:
    """字典序最小的最小分辨集"""
    _gate(g, "metric_dimension_exact", max_vertices)
    dm = dm if dm is not None else distance_matrix(g)
    n = g.vertex_count
    matrix = dm.matrix
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if _distinct_rows(matrix[:, list(subset)], n + 1):
                return list(subset)
    # 不可达：W = V 总是分辨集
    return list(range(n))


def metric_dimension_exact(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES
) -> int:
    return len(minimum_resolving_set(g, dm, max_vertices))
