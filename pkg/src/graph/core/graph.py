"""
不可变简单无向图
顶点为 0..n-1 的连续整数，邻接表升序
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from src.shared.exceptions import (
    DisconnectedGraphError,
    GraphConstructionError,
    GraphError,
    VertexOutOfRangeError,
)

if TYPE_CHECKING:
    from .distance import DistanceMatrix

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """简单无向图，构造后不可修改"""

    vertex_count: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[_check_vertex(self, v)])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def vertices(self) -> range:
        return range(self.vertex_count)


def _check_vertex(g: Graph, v: int) -> int:
    if not 0 <= v < g.vertex_count:
        raise VertexOutOfRangeError(v, g.vertex_count)
    return v


def build_graph(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    构造规范化的图：去重、端点排序、邻接表升序

    Args:
        vertex_count: 顶点数
        edges: 顶点对序列

    Raises:
        GraphConstructionError: 自环或端点越界
    """
    if vertex_count < 0:
        raise GraphConstructionError(f"vertex count must be non-negative, got {vertex_count}")

    normalized = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise GraphConstructionError(f"self-loop at vertex {u}", pair=(u, v))
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphConstructionError(
                f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}", pair=(u, v)
            )
        normalized.add((min(u, v), max(u, v)))

    adjacency: List[List[int]] = [[] for _ in range(vertex_count)]
    for u, v in normalized:
        adjacency[u].append(v)
        adjacency[v].append(u)

    return Graph(
        vertex_count=vertex_count,
        edges=tuple(sorted(normalized)),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def neighbors(g: Graph, v: int) -> List[int]:
    """N(v)，升序"""
    return list(g.adjacency[_check_vertex(g, v)])


def is_connected(g: Graph) -> bool:
    """从顶点 0 出发的一次 BFS 能否到达所有顶点；n <= 1 时为真"""
    if g.vertex_count <= 1:
        return True

    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                queue.append(w)
    return reached == g.vertex_count


def require_connected(g: Graph, operation: str) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError(f"{operation} requires a connected graph", operation=operation)


def is_path_graph(g: Graph) -> bool:
    """
    连通图是否同构于路 P_n：恰有两个 1 度顶点，其余为 2 度

    Raises:
        GraphError: n < 2
        DisconnectedGraphError: 图不连通
    """
    if g.vertex_count < 2:
        raise GraphError(f"path test needs at least 2 vertices, got {g.vertex_count}")
    require_connected(g, "is_path_graph")

    degrees = g.degrees()
    return degrees.count(1) == 2 and degrees.count(2) == g.vertex_count - 2


def diameter(g: Graph, dm: Optional["DistanceMatrix"] = None) -> int:
    """d(G)，距离矩阵的最大元素"""
    from .distance import distance_matrix

    require_connected(g, "diameter")
    dm = dm if dm is not None else distance_matrix(g)
    return dm.max_distance()
