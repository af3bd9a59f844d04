"""
强分辨与强度量维数

w 强分辨 u, v：u 在某条 v-w 最短路上，或 v 在某条 u-w 最短路上，
即 d(w,u) = d(w,v) + d(v,u) 或 d(w,v) = d(w,u) + d(u,v)。
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.graph import DistanceMatrix, Graph, distance_matrix, require_connected
from src.shared.exceptions import SizeGateError, ValidationError
from src.shared.utils.logger import get_logger
from src.shared.utils.validators import require_non_empty, validate_vertex_ids
from .enum import SdimRoute
from .mmd import strong_resolving_graph
from .schema import SdimResult
from .vertex_cover import min_vertex_cover

logger = get_logger(__name__)

DEFAULT_BRUTE_MAX_VERTICES = 12


def strongly_resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    if u == v:
        raise ValidationError("strong resolution needs two distinct vertices", field="pair", value=u)
    validate_vertex_ids([w, u, v], dm.n, "vertex")
    return dm[w, u] == dm[w, v] + dm[v, u] or dm[w, v] == dm[w, u] + dm[u, v]


def resolution_masks(dm: DistanceMatrix) -> Tuple[List[int], int]:
    """
    每个顶点 w 强分辨的顶点对集合，按对的编号编码为整数位掩码

    Returns:
        (各 w 的掩码, 全部顶点对的掩码)
    """
    n = dm.n
    d = dm.matrix
    iu, iv = np.triu_indices(n, k=1)
    duv = d[iu, iv]
    weights = [1 << p for p in range(len(iu))]
    masks: List[int] = []
    for w in range(n):
        dwu, dwv = d[w, iu], d[w, iv]
        hit = (dwu == dwv + duv) | (dwv == dwu + duv)
        masks.append(sum(weights[p] for p in np.flatnonzero(hit).tolist()))
    return masks, (1 << len(iu)) - 1


def is_strong_resolving_set(dm: DistanceMatrix, W: Sequence[int]) -> bool:
    require_non_empty(W, "W", "a strong resolving set must contain at least one vertex")
    validate_vertex_ids(W, dm.n, "W")
    masks, full = resolution_masks(dm)
    covered = 0
    for w in W:
        covered |= masks[w]
    return covered == full


def minimum_strong_resolving_set(
    g: Graph,
    dm: Optional[DistanceMatrix] = None,
    max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES
) -> Tuple[int, ...]:
    """基数递增、同基数字典序的第一个强分辨集"""
    if g.vertex_count > max_vertices:
        raise SizeGateError("strong_metric_dimension", g.vertex_count, max_vertices)
    dm = dm if dm is not None else distance_matrix(g)
    masks, full = resolution_masks(dm)
    n = g.vertex_count
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            covered = 0
            for w in subset:
                covered |= masks[w]
            if covered == full:
                return subset
    return tuple(range(n))


def strong_metric_dimension(
    g: Graph,
    method: SdimRoute = SdimRoute.COVER_OF_SRG,
    dm: Optional[DistanceMatrix] = None,
    max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES
) -> SdimResult:
    """
    sdim(G)：COVER_OF_SRG 取 α(G_SR)，BRUTE_FORCE 穷举（n <= max_vertices）

    Raises:
        SizeGateError: 穷举超出规模限制
        ValidationError: n < 2 或途径不支持一般图
    """
    if g.vertex_count < 2:
        raise ValidationError("strong metric dimension needs at least 2 vertices", field="graph",
                              value=g.vertex_count)
    require_connected(g, "strong_metric_dimension")
    dm = dm if dm is not None else distance_matrix(g)

    if method is SdimRoute.COVER_OF_SRG:
        cover = min_vertex_cover(strong_resolving_graph(g, dm).graph)
        return SdimResult(value=cover.size, route=method, certificate=cover)
    if method is SdimRoute.BRUTE_FORCE:
        witness = minimum_strong_resolving_set(g, dm, max_vertices)
        logger.debug("strong resolving set found", size=len(witness))
        return SdimResult(value=len(witness), route=method, certificate=witness)
    raise ValidationError(f"sdim method {method.value} applies to chain cycles only", field="method",
                          value=method.value)
