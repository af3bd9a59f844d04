"""
链环强分辨图的预测边集

偶链环：E = A ∪ {v^1_1 v^m_{n_m/2+1}}，A 为各环的对径点对。
奇链环：E = A1 ∪ A2 ∪ A3 ∪ B1 ∪ B2 ∪ B3 ∪ B4；字面展开中端点为粘合点的边
与 B4 中 i > k 的反向配对剔除，单独记入 dropped_literal。
"""

from typing import Dict, Iterable, Iterator, List, Set, Tuple

from src.chains import ChainCycle, Parity
from src.graph import Edge
from src.shared.exceptions import HypothesisViolationError, ParityError
from .schema import PredictedEdges

Pair = Tuple[Tuple[int, int], Tuple[int, int]]


def _wrap(n: int, position: int) -> int:
    """下标按 n 取模，代表元取 1..n"""
    return (position - 1) % n + 1


def _edge(cc: ChainCycle, a: Tuple[int, int], b: Tuple[int, int]) -> Edge:
    u, v = cc.vertex(*a), cc.vertex(*b)
    return (min(u, v), max(u, v))


def _require_parity(cc: ChainCycle, parity: Parity) -> None:
    if cc.parity is not parity:
        raise ParityError(f"expected a {parity.value} chain cycle, got {cc.spec}",
                          cycle_lengths=cc.cycle_lengths, parity=cc.parity.value)


def require_odd_hypotheses(cc: ChainCycle) -> None:
    """奇链环的 MMD 刻画要求每个 n_i >= 5"""
    _require_parity(cc, Parity.ODD)
    small = [n for n in cc.cycle_lengths if n < 5]
    if small:
        raise HypothesisViolationError(
            f"odd chain characterisation needs every n_i >= 5, got {list(cc.cycle_lengths)}",
            requirement="n_i >= 5",
        )


def _even_pairs(cc: ChainCycle) -> Iterator[Pair]:
    for i in range(1, cc.m + 1):
        n = cc.n(i)
        h = n // 2
        for j in list(range(2, h + 1)) + list(range(h + 2, n + 1)):
            yield (i, j), (i, _wrap(n, j + h))
    m = cc.m
    yield (1, 1), (m, cc.n(m) // 2 + 1)


def _odd_pairs(cc: ChainCycle) -> Iterator[Pair]:
    m = cc.m

    def stride_pairs(i: int, js: Iterable[int]) -> Iterator[Pair]:
        n = cc.n(i)
        s = (n - 1) // 2
        for j in js:
            yield (i, j), (i, _wrap(n, j + s))

    def centre(i: int) -> int:
        return (cc.n(i) + 1) // 2

    c1 = centre(1)
    yield from stride_pairs(1, list(range(1, c1 + 1)) + list(range(c1 + 2, cc.n(1) + 1)))
    yield from stride_pairs(m, range(2, cc.n(m) + 1))
    for i in range(2, m):
        ci = centre(i)
        yield from stride_pairs(i, list(range(2, ci + 1)) + list(range(ci + 2, cc.n(i) + 1)))

    last_pair = [(m, centre(m)), (m, centre(m) + 1)]
    first_pair = [(1, 1), (1, 2)]
    for a in first_pair:
        for b in last_pair:
            yield a, b
    for k in range(2, m):
        for a in first_pair:
            yield a, (k, centre(k))
    for i in range(2, m):
        for b in last_pair:
            yield (i, 2), b
    for i in range(2, m):
        for k in range(i + 1, m):
            yield (i, 2), (k, centre(k))


def _odd_reversed_b4(cc: ChainCycle) -> Iterator[Pair]:
    """B4 字面上对任意两个中间环配对；i > k 的方向不是 MMD"""
    for i in range(3, cc.m):
        for k in range(2, i):
            yield (i, 2), (k, (cc.n(k) + 1) // 2)


def _collect(cc: ChainCycle, pairs: Iterable[Pair], literal_only: Iterable[Pair] = ()) -> PredictedEdges:
    cut = cc.cut_set
    kept: Set[Edge] = set()
    dropped: Set[Edge] = {_edge(cc, a, b) for a, b in literal_only}
    for a, b in pairs:
        e = _edge(cc, a, b)
        if e[0] == e[1]:
            continue
        (dropped if e[0] in cut or e[1] in cut else kept).add(e)
    return PredictedEdges(edges=frozenset(kept), dropped_literal=frozenset(dropped - kept))


def predicted_srg_even(cc: ChainCycle) -> PredictedEdges:
    _require_parity(cc, Parity.EVEN)
    return _collect(cc, _even_pairs(cc))


def predicted_srg_odd(cc: ChainCycle) -> PredictedEdges:
    """
    Raises:
        ParityError: 不是奇链环
        HypothesisViolationError: 某个 n_i < 5
    """
    require_odd_hypotheses(cc)
    return _collect(cc, _odd_pairs(cc), literal_only=_odd_reversed_b4(cc))


def predicted_srg(cc: ChainCycle) -> PredictedEdges:
    return predicted_srg_even(cc) if cc.parity is Parity.EVEN else predicted_srg_odd(cc)


def predicted_mmd_paths(cc: ChainCycle) -> Dict[str, List[int]]:
    """
    奇链环 G_SR 中各环对应的路

    first: v^1_1 -> v^1_2，步长 floor(n_1/2)，n_1 - 1 个顶点
    last: v^m_{(n_m+1)/2} -> v^m_{(n_m+3)/2}，步长 floor(n_m/2)，n_m - 1 个顶点
    middle.i: v^i_2 -> v^i_{(n_i+1)/2}，步长 ceil(n_i/2)，n_i - 2 个顶点
    """
    require_odd_hypotheses(cc)
    m = cc.m

    def walk(i: int, start: int, stride: int, count: int) -> List[int]:
        n = cc.n(i)
        return [cc.vertex(i, _wrap(n, start + k * stride)) for k in range(count)]

    n1, nm = cc.n(1), cc.n(m)
    paths = {
        'first': walk(1, 1, n1 // 2, n1 - 1),
        'last': walk(m, (nm + 1) // 2, nm // 2, nm - 1),
    }
    for i in range(2, m):
        ni = cc.n(i)
        paths[f'middle.{i}'] = walk(i, 2, (ni + 1) // 2, ni - 2)
    return paths


def path_edges(path: List[int]) -> Set[Edge]:
    return {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
