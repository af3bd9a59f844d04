"""
精确最小顶点覆盖（分支定界）与最大独立集（穷举）

分支：取度最大的顶点（同度取编号最小）v，要么 v 入覆盖，要么 N(v) 全部入覆盖。
每个节点先做核化：删去孤立点，1 度点强制取其邻点；下界为贪心极大匹配的大小。
"""

from typing import Dict, List, Optional, Set, Tuple

from src.graph import Graph
from src.shared.exceptions import SizeGateError
from src.shared.utils.logger import get_logger
from .enum import CoverMethod
from .schema import CoverResult

logger = get_logger(__name__)

Adjacency = Dict[int, Set[int]]


def _remove(adj: Adjacency, v: int) -> None:
    for w in adj.pop(v, ()):
        adj[w].discard(v)


def _kernelize(adj: Adjacency, chosen: List[int]) -> None:
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in adj:
                continue
            degree = len(adj[v])
            if degree == 0:
                del adj[v]
                changed = True
            elif degree == 1:
                (w,) = adj[v]
                chosen.append(w)
                _remove(adj, w)
                changed = True


def _matching_bound(adj: Adjacency) -> int:
    matched: Set[int] = set()
    size = 0
    for u in sorted(adj):
        if u in matched:
            continue
        for w in sorted(adj[u]):
            if w not in matched:
                matched.update((u, w))
                size += 1
                break
    return size


class _BranchAndBound:
    def __init__(self, adj: Adjacency):
        self.best: Tuple[int, ...] = tuple(sorted(v for v in adj if adj[v]))
        self.nodes = 0
        self._search({v: set(nbrs) for v, nbrs in adj.items()}, [])

    def _search(self, adj: Adjacency, chosen: List[int]) -> None:
        self.nodes += 1
        chosen = list(chosen)
        _kernelize(adj, chosen)
        if not adj:
            if len(chosen) < len(self.best):
                self.best = tuple(sorted(chosen))
            return
        if len(chosen) + _matching_bound(adj) >= len(self.best):
            return

        v = min(adj, key=lambda x: (-len(adj[x]), x))

        take_v = {x: set(nbrs) for x, nbrs in adj.items()}
        _remove(take_v, v)
        self._search(take_v, chosen + [v])

        neighbours = sorted(adj[v])
        take_nbrs = {x: set(nbrs) for x, nbrs in adj.items()}
        for w in neighbours:
            _remove(take_nbrs, w)
        self._search(take_nbrs, chosen + neighbours)


def min_vertex_cover(g: Graph) -> CoverResult:
    """精确最小顶点覆盖；图可以不连通、含孤立点"""
    adj: Adjacency = {v: set(g.adjacency[v]) for v in g.vertices()}
    solver = _BranchAndBound(adj)
    logger.debug("vertex cover solved", vertices=g.vertex_count, edges=g.edge_count,
                 size=len(solver.best), nodes=solver.nodes)
    return CoverResult(cover=solver.best, method=CoverMethod.BRANCH_BOUND, vertex_count=g.vertex_count)


def is_vertex_cover(g: Graph, cover) -> bool:
    chosen = set(cover)
    return all(u in chosen or v in chosen for u, v in g.edges)


def uncovered_edges(edges, cover) -> List[Tuple[int, int]]:
    chosen = set(cover)
    return sorted(e for e in edges if e[0] not in chosen and e[1] not in chosen)


def independence_number_exact(g: Graph, max_vertices: Optional[int] = 12) -> int:
    """
    最大独立集大小 β(G)，位掩码穷举

    Raises:
        SizeGateError: n 超过 max_vertices
    """
    n = g.vertex_count
    if max_vertices is not None and n > max_vertices:
        raise SizeGateError("independence_number_exact", n, max_vertices)

    nbr_mask = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    memo: Dict[int, int] = {}

    def best(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        value = 1 + best(rest & ~nbr_mask[v])
        if nbr_mask[v] & rest:
            value = max(value, best(rest))
        memo[mask] = value
        return value

    return best((1 << n) - 1)
