"""
链环：由 m 个同奇偶性的环依次在（近）对径点粘合而成

第 i 个环的位置 a_i（偶：n_i/2+1，奇：(n_i+1)/2+1）与第 i+1 个环的位置 1 粘合。
顶点 v^i_j 的规范标签为 "v{i}_{j}"，粘合点显示为 "v{i}_{a_i}=v{i+1}_1"。
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple

from src.graph import Graph
from src.shared.exceptions import LabelError, ParityError
from .enum import Parity
from .labeled import LabeledGraph, build_chain, build_cycle

Position = Tuple[int, int]


def position_label(i: int, j: int) -> str:
    return f"v{i}_{j}"


@dataclass(frozen=True)
class ChainCycle:
    """链环实例"""

    lg: LabeledGraph
    cycle_lengths: Tuple[int, ...]
    parity: Parity
    alias: Dict[Position, int] = field(repr=False)
    cut_vertices: Tuple[int, ...]
    # 每个顶点的规范位置 (i, j)，粘合点取较早的环
    positions: Tuple[Position, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.cycle_lengths)

    @property
    def graph(self) -> Graph:
        return self.lg.graph

    @property
    def spec(self) -> str:
        return f"{self.parity.value}:{','.join(str(n) for n in self.cycle_lengths)}"

    def n(self, i: int) -> int:
        """第 i 个环的长度 n_i（1 起始）"""
        self._check_cycle(i)
        return self.cycle_lengths[i - 1]

    def attachment(self, i: int) -> int:
        """a_i"""
        return self.parity.attachment(self.n(i))

    def vertex(self, i: int, j: int) -> int:
        return resolve_label(self, i, j)

    def label(self, v: int) -> str:
        return self.lg.label(v)

    def position_label(self, v: int) -> str:
        """规范位置标签 v{i}_{j}"""
        return position_label(*self.positions[v])

    def cycle_vertices(self, i: int) -> List[int]:
        return [self.alias[(i, j)] for j in range(1, self.n(i) + 1)]

    @property
    def cut_set(self) -> FrozenSet[int]:
        return frozenset(self.cut_vertices)

    def _check_cycle(self, i: int) -> None:
        if not 1 <= i <= len(self.cycle_lengths):
            raise LabelError(f"cycle index {i} outside 1..{len(self.cycle_lengths)}", position=(i, 0))


def _build_chain_cycle(ns: Sequence[int], parity: Parity) -> ChainCycle:
    ns = tuple(int(n) for n in ns)
    if len(ns) < 2:
        raise ParityError(f"a chain cycle needs m >= 2 cycles, got {len(ns)}", cycle_lengths=ns, parity=parity.value)
    bad = [n for n in ns if not parity.accepts(n)]
    if bad:
        kind = "even n_i >= 4" if parity is Parity.EVEN else "odd n_i >= 3"
        raise ParityError(
            f"parity: {parity.value} chain cycles need {kind}, got {list(ns)}",
            cycle_lengths=ns,
            parity=parity.value,
        )

    parts = [build_cycle(n, prefix=f"v{i}_") for i, n in enumerate(ns, start=1)]
    attachments = [
        (position_label(i, 1), position_label(i, parity.attachment(n)))
        for i, n in enumerate(ns, start=1)
    ]
    lg = build_chain(parts, attachments)

    alias: Dict[Position, int] = {}
    positions: List[Position] = [(0, 0)] * lg.vertex_count
    assigned = [False] * lg.vertex_count
    for i, n in enumerate(ns, start=1):
        for j in range(1, n + 1):
            v = lg.lookup(position_label(i, j))
            alias[(i, j)] = v
            if not assigned[v]:
                positions[v] = (i, j)
                assigned[v] = True

    cut_vertices = tuple(alias[(i, parity.attachment(n))] for i, n in enumerate(ns[:-1], start=1))

    return ChainCycle(
        lg=lg,
        cycle_lengths=ns,
        parity=parity,
        alias=alias,
        cut_vertices=cut_vertices,
        positions=tuple(positions),
    )


def build_even_chain_cycle(ns: Sequence[int]) -> ChainCycle:
    """全偶环链环，alias(i, n_i/2+1) = alias(i+1, 1)"""
    return _build_chain_cycle(ns, Parity.EVEN)


def build_odd_chain_cycle(ns: Sequence[int]) -> ChainCycle:
    """全奇环链环，alias(i, (n_i+1)/2+1) = alias(i+1, 1)"""
    return _build_chain_cycle(ns, Parity.ODD)


def build_chain_cycle(parity: Parity, ns: Sequence[int]) -> ChainCycle:
    return _build_chain_cycle(ns, parity)


def resolve_label(cc: ChainCycle, i: int, j: int) -> int:
    """(i, j) -> 规范顶点编号"""
    if not 1 <= i <= cc.m or not 1 <= j <= cc.cycle_lengths[i - 1]:
        raise LabelError(f"position v{i}_{j} is outside the chain {cc.spec}", position=(i, j))
    return cc.alias[(i, j)]


def halves(cc: ChainCycle, i: int) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    偶环的两个半环 U1 = {v^i_1..v^i_{n/2}}，U2 = {v^i_{n/2+1}..v^i_n}

    Raises:
        ParityError: 奇链环
    """
    if cc.parity is not Parity.EVEN:
        raise ParityError("halves are defined for even chain cycles only",
                          cycle_lengths=cc.cycle_lengths, parity=cc.parity.value)
    n = cc.n(i)
    u1 = frozenset(resolve_label(cc, i, j) for j in range(1, n // 2 + 1))
    u2 = frozenset(resolve_label(cc, i, j) for j in range(n // 2 + 1, n + 1))
    return u1, u2
