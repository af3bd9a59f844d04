"""
最大距离与相互最大距离 (MMD)

u MD v：u 的每个邻点 w 都满足 d(v, w) <= d(u, v)
u MMD v：u MD v 且 v MD u；G_SR 的边恰为所有 MMD 顶点对
"""

from typing import List, Optional, Sequence

import numpy as np

from src.chains import ChainCycle
from src.graph import DistanceMatrix, Edge, Graph, distance_matrix, require_connected
from src.shared.utils.logger import get_logger
from src.shared.utils.validators import validate_vertex_ids
from .schema import SrgReport

logger = get_logger(__name__)


def is_maximally_distant(dm: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    """u MD v（非对称）"""
    validate_vertex_ids([u, v], g.vertex_count, "vertex")
    duv = dm[u, v]
    return all(dm[v, w] <= duv for w in g.adjacency[u])


def md_matrix(dm: DistanceMatrix, g: Graph) -> np.ndarray:
    """md[u, v] 为 u MD v"""
    n = g.vertex_count
    matrix = dm.matrix
    # reach[u, v] = max_{w ∈ N(u)} d(w, v)
    reach = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        if g.adjacency[u]:
            reach[u] = matrix[list(g.adjacency[u])].max(axis=0)
    return reach <= matrix


def mmd_pairs(dm: DistanceMatrix, g: Graph) -> List[Edge]:
    """所有无序 MMD 对 (u < v)，升序"""
    require_connected(g, "mmd_pairs")
    md = md_matrix(dm, g)
    mutual = md & md.T
    np.fill_diagonal(mutual, False)
    us, vs = np.nonzero(np.triu(mutual, k=1))
    return [(int(u), int(v)) for u, v in zip(us, vs)]


def strong_resolving_graph(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    instance: str = "graph"
) -> SrgReport:
    """计算侧的 G_SR；孤立顶点保留"""
    dm = dm if dm is not None else distance_matrix(g)
    edges = frozenset(mmd_pairs(dm, g))
    report = SrgReport(instance=instance, vertex_count=g.vertex_count, computed_edges=edges)
    logger.debug("strong resolving graph computed", instance=instance, edges=len(edges),
                 isolated=len(report.isolated_vertices()))
    return report


def diameter_pairs(g: Graph, dm: Optional[DistanceMatrix] = None) -> List[Edge]:
    """距离等于直径的无序顶点对"""
    require_connected(g, "diameter_pairs")
    dm = dm if dm is not None else distance_matrix(g)
    diam = dm.max_distance()
    us, vs = np.nonzero(np.triu(dm.matrix == diam, k=1))
    return [(int(u), int(v)) for u, v in zip(us, vs)]


def cut_vertex_exclusion(cc: ChainCycle, srg: SrgReport) -> List[int]:
    """在 G_SR 中度数不为 0 的粘合点；空列表表示全部孤立"""
    isolated = set(srg.isolated_vertices())
    return [x for x in cc.cut_vertices if x not in isolated]


def cross_cycle_pairs(cc: ChainCycle, edges: Sequence[Edge]) -> List[Edge]:
    """端点不在同一个环上的边"""
    cycle_of = [set() for _ in range(cc.graph.vertex_count)]
    for i in range(1, cc.m + 1):
        for v in cc.cycle_vertices(i):
            cycle_of[v].add(i)
    return [(u, v) for u, v in edges if not cycle_of[u] & cycle_of[v]]
