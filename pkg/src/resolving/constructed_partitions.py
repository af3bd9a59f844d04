"""
链环的三块构造划分

Q_1 = 第 1 个环去掉 v^1_h 与 v^1_{h+1}
Q_2 = 中间环 (i = 2..m-1) 的 v^i_{h_i+3..n_i}，再加 v^m_{n_m}
Q_3 = 其余顶点
偶环 h = n/2，奇环 h = ceil(n/2)。
"""

from typing import List

from src.chains import ChainCycle, Parity
from src.shared.exceptions import ParityError
from .schema import Partition


def _constructed_partition(cc: ChainCycle) -> Partition:
    half = cc.parity.half

    h1 = half(cc.n(1))
    q1 = [cc.vertex(1, j) for j in range(1, cc.n(1) + 1) if j not in (h1, h1 + 1)]

    q2: List[int] = []
    for i in range(2, cc.m):
        q2.extend(cc.vertex(i, j) for j in range(half(cc.n(i)) + 3, cc.n(i) + 1))
    q2.append(cc.vertex(cc.m, cc.n(cc.m)))

    taken = set(q1) | set(q2)
    q3 = [v for v in cc.graph.vertices() if v not in taken]
    return Partition.of([q1, q2, q3], cc.graph.vertex_count)


def _require(cc: ChainCycle, parity: Parity) -> None:
    if cc.parity is not parity:
        raise ParityError(f"expected a {parity.value} chain cycle, got {cc.spec}",
                          cycle_lengths=cc.cycle_lengths, parity=cc.parity.value)


def constructed_partition_even(cc: ChainCycle) -> Partition:
    _require(cc, Parity.EVEN)
    return _constructed_partition(cc)


def constructed_partition_odd(cc: ChainCycle) -> Partition:
    _require(cc, Parity.ODD)
    return _constructed_partition(cc)


def constructed_partition(cc: ChainCycle) -> Partition:
    return constructed_partition_even(cc) if cc.parity is Parity.EVEN else constructed_partition_odd(cc)
