"""
划分表示与分辨性检查
r(v|Π) = (d(v,Q_1), ..., d(v,Q_k))，d(v,Q) = min_{q∈Q} d(v,q)
"""

from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Optional, Sequence, Tuple

import numpy as np

from src.graph import DistanceMatrix
from src.shared.exceptions import ValidationError
from src.shared.utils.validators import require_non_empty, validate_vertex_ids
from .schema import Partition, Representation


@dataclass(frozen=True)
class ResolveCheck:
    """分辨性检查结果；不分辨时 pair 为第一对表示相同的顶点"""

    resolving: bool
    pair: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.resolving


def _check_partition(dm: DistanceMatrix, p: Partition) -> None:
    if p.vertex_count != dm.n:
        raise ValidationError(
            f"partition covers {p.vertex_count} vertices but the graph has {dm.n}", field="partition"
        )


def partition_representation(dm: DistanceMatrix, p: Partition, v: int) -> Representation:
    _check_partition(dm, p)
    validate_vertex_ids([v], dm.n, "v")
    row = dm.row(v)
    return tuple(min(row[q] for q in block) for block in p.blocks)


def representation_matrix(dm: DistanceMatrix, p: Partition) -> np.ndarray:
    """第 v 行为 r(v|Π)"""
    _check_partition(dm, p)
    return block_minima(dm.matrix, p.labels, p.k)


def block_minima(matrix: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    return np.stack([matrix[:, labels == b].min(axis=1) for b in range(k)], axis=1)


def first_collision(rows: Iterable[Hashable]) -> Optional[Tuple[int, int]]:
    """按顶点升序找到第一对相同的行"""
    first_seen: Dict[Hashable, int] = {}
    for v, key in enumerate(rows):
        if key in first_seen:
            return first_seen[key], v
        first_seen[key] = v
    return None


def is_resolving_partition(dm: DistanceMatrix, p: Partition) -> ResolveCheck:
    reps = representation_matrix(dm, p)
    pair = first_collision(tuple(row) for row in reps.tolist())
    return ResolveCheck(resolving=pair is None, pair=pair)


def is_resolving_set(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    """W 的距离向量是否两两不同"""
    require_non_empty(W, "W", "a resolving set must contain at least one landmark")
    validate_vertex_ids(W, dm.n, "W")
    rows = dm.matrix[:, list(W)]
    return np.unique(rows, axis=0).shape[0] == dm.n
