"""
链环强度量维数的闭式公式与显式覆盖构造

偶：sdim = 1 + Σ (n_i - 2)/2
奇：sdim = m - 1 + floor(n_1/2) + floor(n_m/2) + Σ_{i=2}^{m-1} floor((n_i - 2)/2)
"""

from typing import List, Optional, Sequence, Set

from src.chains import ChainCycle, Parity
from src.graph import Edge
from src.shared.exceptions import CoverVerificationError, HypothesisViolationError
from src.shared.utils.logger import get_logger
from .enum import CoverMethod
from .mmd import strong_resolving_graph
from .predicted import predicted_mmd_paths, require_odd_hypotheses
from .schema import CoverResult, SrgReport
from .vertex_cover import uncovered_edges

logger = get_logger(__name__)


def sdim_formula(parity: Parity, ns: Sequence[int]) -> int:
    """
    Raises:
        HypothesisViolationError: m < 2，或环长不满足本族的奇偶性与下界
    """
    ns = [int(n) for n in ns]
    if len(ns) < 2:
        raise HypothesisViolationError(f"closed form needs m >= 2 cycles, got {len(ns)}", requirement="m >= 2")
    if parity is Parity.EVEN:
        if any(n % 2 or n < 4 for n in ns):
            raise HypothesisViolationError(f"even closed form needs even n_i >= 4, got {ns}",
                                           requirement="even n_i >= 4")
        return 1 + sum((n - 2) // 2 for n in ns)

    if any(n % 2 == 0 or n < 5 for n in ns):
        raise HypothesisViolationError(f"odd closed form needs odd n_i >= 5, got {ns}",
                                       requirement="odd n_i >= 5")
    m = len(ns)
    return m - 1 + ns[0] // 2 + ns[-1] // 2 + sum((n - 2) // 2 for n in ns[1:-1])


def _even_cover(cc: ChainCycle) -> Set[int]:
    cover = {cc.vertex(1, 1)}
    for i in range(1, cc.m + 1):
        cover.update(cc.vertex(i, j) for j in range(2, cc.n(i) // 2 + 1))
    return cover


def _odd_cover(cc: ChainCycle, middle_cycles: Sequence[int]) -> Set[int]:
    paths = predicted_mmd_paths(cc)
    cover = {cc.vertex(1, 1), cc.vertex(1, 2)}
    cover.update(cc.vertex(i, 2) for i in range(2, cc.m))
    # 路上偶数下标的顶点
    cover.update(paths['first'][2:len(paths['first']) - 1:2])
    cover.update(paths['last'][0:len(paths['last']) - 1:2])
    for i in middle_cycles:
        cover.update(paths[f'middle.{i}'][2::2])
    return cover


def _verify(cc: ChainCycle, cover: Set[int], srg: SrgReport) -> None:
    missed = uncovered_edges(srg.computed_edges, cover)
    if missed:
        u, v = missed[0]
        edge = (cc.position_label(u), cc.position_label(v))
        raise CoverVerificationError(
            f"constructed cover of {cc.spec} misses edge {edge[0]}-{edge[1]}",
            edge=edge,
            instance=cc.spec,
        )


def constructed_cover(cc: ChainCycle, srg: Optional[SrgReport] = None) -> CoverResult:
    """
    显式覆盖；返回前在计算得到的 G_SR 上核对

    偶：每个环取 v^i_2..v^i_{n_i/2}，再加 v^1_1。
    奇：v^1_1, v^1_2, 各中间环的 v^i_2，再沿各环的路隔点选取。

    Raises:
        HypothesisViolationError: 奇链环某个 n_i < 5
        CoverVerificationError: 构造的集合漏掉 G_SR 的边
    """
    if cc.parity is Parity.EVEN:
        cover = _even_cover(cc)
    else:
        require_odd_hypotheses(cc)
        cover = _odd_cover(cc, range(2, cc.m))

    srg = srg if srg is not None else strong_resolving_graph(cc.graph, instance=cc.spec)
    _verify(cc, cover, srg)
    logger.debug("constructed cover verified", instance=cc.spec, size=len(cover))
    return CoverResult(cover=tuple(sorted(cover)), method=CoverMethod.CONSTRUCTION,
                       vertex_count=cc.graph.vertex_count)


def literal_range_uncovered(cc: ChainCycle, srg: Optional[SrgReport] = None) -> List[Edge]:
    """奇链环：中间环的隔点选取只做到第 m-2 个环时漏掉的 G_SR 边"""
    require_odd_hypotheses(cc)
    srg = srg if srg is not None else strong_resolving_graph(cc.graph, instance=cc.spec)
    return uncovered_edges(srg.computed_edges, _odd_cover(cc, range(2, cc.m - 1)))
