"""
随机连通图语料
networkx G(n, p) 生成，不连通则用下一个种子重抽
"""

import random
from typing import List, Optional, Tuple

import networkx as nx

from src.graph import Graph, build_graph, distance_matrix
from src.resolving import metric_dimension_exact, partition_dimension_exact
from src.shared.settings import ChainDimSettings
from src.shared.utils.logger import get_logger
from src.shared.utils.pool_utils import ordered_map
from src.strong import SdimRoute, independence_number_exact, min_vertex_cover, strong_metric_dimension
from src.strong import strong_resolving_graph
from .schema import RandomCheck, RandomSuiteReport

logger = get_logger(__name__)


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """节点重新编号为 0..n-1（按排序后的节点顺序）"""
    index = {node: i for i, node in enumerate(sorted(nx_graph.nodes()))}
    return build_graph(len(index), ((index[u], index[v]) for u, v in nx_graph.edges()))


def random_connected_corpus(
    count: int,
    seed: int,
    min_vertices: int = 2,
    max_vertices: int = 9,
    edge_probability: float = 0.35
) -> List[Graph]:
    """固定种子下结果确定"""
    rng = random.Random(seed)
    corpus: List[Graph] = []
    while len(corpus) < count:
        n = rng.randint(min_vertices, max_vertices)
        candidate = nx.gnp_random_graph(n, edge_probability, seed=rng.randrange(2 ** 32))
        if nx.is_connected(candidate):
            corpus.append(from_networkx(candidate))
    return corpus


def _check_graph(job: Tuple[int, Graph, ChainDimSettings]) -> RandomCheck:
    index, g, settings = job
    limits = settings.limits
    dm = distance_matrix(g)
    srg = strong_resolving_graph(g, dm).graph
    alpha = min_vertex_cover(srg).size
    beta = independence_number_exact(srg, max_vertices=None)
    brute = strong_metric_dimension(g, SdimRoute.BRUTE_FORCE, dm, limits.sdim_brute_max_vertices).value

    check = RandomCheck(graph=f"random#{index}:{g.vertex_count},{g.edge_count}",
                        vertex_count=g.vertex_count, sdim_brute=brute, alpha=alpha, beta=beta)
    if brute != alpha:
        check.failures.append(f"brute-force sdim {brute} != alpha(G_SR) {alpha}")
    if alpha + beta != g.vertex_count:
        check.failures.append(f"alpha + beta = {alpha + beta} != n = {g.vertex_count}")

    if g.vertex_count <= settings.verification.pd_bound_max_vertices:
        check.pd = partition_dimension_exact(g, dm, max_vertices=limits.pd_exact_max_vertices).value
        check.dim = metric_dimension_exact(g, dm, limits.md_exact_max_vertices)
        if check.pd > check.dim + 1:
            check.failures.append(f"pd {check.pd} > dim + 1 = {check.dim + 1}")
    return check


def run_random_suite(settings: Optional[ChainDimSettings] = None, seed: Optional[int] = None) -> RandomSuiteReport:
    settings = settings or ChainDimSettings()
    v = settings.verification
    seed = v.seed if seed is None else seed
    corpus = random_connected_corpus(
        v.random_corpus_size, seed, v.random_min_vertices, v.random_max_vertices, v.random_edge_probability
    )
    results = ordered_map(_check_graph, [(i, g, settings) for i, g in enumerate(corpus)], workers=v.workers)
    report = RandomSuiteReport(seed=seed, size=len(corpus), results=results)
    logger.info("random suite finished", seed=seed, size=len(corpus), failures=len(report.failures))
    return report
