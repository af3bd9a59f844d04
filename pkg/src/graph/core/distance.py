"""
距离矩阵
对每个顶点做一次 BFS，结果存为只读 numpy 矩阵
"""

from collections import deque
from typing import Iterable, List, Tuple

import numpy as np

from src.shared.exceptions import DisconnectedGraphError, VertexOutOfRangeError
from .graph import Graph

# 不连通图中不可达顶点对的哨兵值
UNREACHABLE = -1


class DistanceMatrix:
    """n×n 最短路跳数表，构造后只读"""

    __slots__ = ('_matrix', '_rows')

    def __init__(self, matrix: np.ndarray):
        matrix = np.array(matrix, dtype=np.int64, copy=True)
        matrix.setflags(write=False)
        self._matrix = matrix
        self._rows: Tuple[Tuple[int, ...], ...] = tuple(tuple(int(x) for x in row) for row in matrix)

    @property
    def n(self) -> int:
        return self._matrix.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def __getitem__(self, pair: Tuple[int, int]) -> int:
        u, v = pair
        return self._rows[u][v]

    def dist(self, u: int, v: int) -> int:
        for x in (u, v):
            if not 0 <= x < self.n:
                raise VertexOutOfRangeError(x, self.n)
        return self._rows[u][v]

    def row(self, u: int) -> Tuple[int, ...]:
        return self._rows[u]

    @property
    def is_connected(self) -> bool:
        return not bool((self._matrix == UNREACHABLE).any())

    def max_distance(self) -> int:
        if not self.is_connected:
            raise DisconnectedGraphError("diameter is undefined on a disconnected graph", operation="diameter")
        return int(self._matrix.max()) if self.n else 0

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self._rows]


def _bfs_row(g: Graph, source: int) -> List[int]:
    dist = [UNREACHABLE] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> DistanceMatrix:
    """所有顶点对的 BFS 跳数；不可达记为 UNREACHABLE"""
    rows: Iterable[List[int]] = (_bfs_row(g, s) for s in range(g.vertex_count))
    return DistanceMatrix(np.array(list(rows), dtype=np.int64).reshape(g.vertex_count, g.vertex_count))
