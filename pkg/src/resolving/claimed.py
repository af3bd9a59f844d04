"""
构造划分下各顶点表示的分段公式

公式逐条求值后与 BFS 计算的表示比对，计算值为准。
公式 i 的下标范围按原式求值：含 n_2 的两组只作用于第 2 个环，
"v^i_{h_i+j}" 形式的位置超出环长时记入 out_of_range。
"""

from typing import Iterator, Optional

from src.chains import ChainCycle, Parity
from src.graph import DistanceMatrix, distance_matrix
from src.shared.utils.logger import get_logger
from .constructed_partitions import constructed_partition
from .representation import representation_matrix
from .schema import ClaimedValue, ClaimMismatch, DiscrepancyReport, Partition, VertexClaims

logger = get_logger(__name__)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _even_claims(cc: ChainCycle) -> Iterator[ClaimedValue]:
    m = cc.m
    n = cc.n
    h = {i: n(i) // 2 for i in range(1, m + 1)}
    s3 = sum(h[k] for k in range(3, m + 1))
    s2m1 = sum(h[k] for k in range(2, m))
    s2m = sum(h[k] for k in range(2, m + 1))
    n1, h1, nm, hm = n(1), h[1], n(m), h[m]

    yield ClaimedValue("first.center", (1, h1), (1, 2, 0))
    yield ClaimedValue("first.center_next", (1, h1 + 1), (1, 1, 0))
    yield ClaimedValue("last.end", (m, nm), (s2m + 2, 0, 1))
    for j in range(1, h1):
        yield ClaimedValue("first.low", (1, j), (0, n1 - j - 1, n1 - j - 3))
    for j in range(h1 + 2, n1 + 1):
        yield ClaimedValue("first.high", (1, j), (0, j - h1, j - h1 - 1))

    n2, h2 = n(2), h[2]
    q2 = _ceil_div(n2, 4)
    for j in range(1, q2 + 1):
        yield ClaimedValue("cycle2.near", (2, j), (j, j, 0))
    for j in range(q2 + 1, h2 + 1):
        yield ClaimedValue("cycle2.mid", (2, j), (j, h2 - j + 2, 0))
    for i in range(3, m + 1):
        qi = _ceil_div(n(i), 4)
        for j in range(1, qi + 1):
            yield ClaimedValue("later.near", (i, j), (s3 + j, j, 0))
        for j in range(qi + 1, h[i] + 1):
            yield ClaimedValue("later.mid", (i, j), (s3 + j, h[i] - j + 2, 0))

    for i in range(2, m):
        yield ClaimedValue("offset.middle", (i, h[i] + 2), (s2m1, 1, 0))
    for j in range(hm + 1, nm):
        yield ClaimedValue("offset.last", (m, hm + j), (s2m1 + nm - j + 2, nm - j, 0))

    t2 = _ceil_div(3 * n2, 4)
    for j in range(h2 + 3, t2 + 2):
        yield ClaimedValue("cycle2.q2", (2, j), (n2 + 2 - j, 0, j - h2 - 2))
    for j in range(t2 + 2, n2 + 1):
        yield ClaimedValue("cycle2.q2far", (2, j), (n2 + 2 - j, 0, n2 + 1 - j))
    for i in range(3, m + 1):
        ni, ti = n(i), _ceil_div(3 * n(i), 4)
        for j in range(h[i] + 3, ti + 2):
            yield ClaimedValue("later.q2", (i, j), (s3 + ni - j, 0, j - h[i] - 2))
        for j in range(ti + 2, ni + 1):
            yield ClaimedValue("later.q2far", (i, j), (s3 + ni - j, 0, ni + 1 - j))


def _odd_claims(cc: ChainCycle) -> Iterator[ClaimedValue]:
    m = cc.m
    n = cc.n
    c = {i: (n(i) + 1) // 2 for i in range(1, m + 1)}
    f = {i: n(i) // 2 for i in range(1, m + 1)}
    s3_floor = sum(f[k] for k in range(3, m + 1))
    s3_ceil = sum(c[k] for k in range(3, m + 1))
    s2m1 = sum(f[k] for k in range(2, m))
    s2m = sum(f[k] for k in range(2, m + 1))
    n1, c1, nm, cm = n(1), c[1], n(m), c[m]

    yield ClaimedValue("first.center", (1, c1), (1, 2, 0))
    yield ClaimedValue("first.center_next", (1, c1 + 1), (1, 1, 0))
    yield ClaimedValue("last.end", (m, nm), (s2m + 2, 0, 1))
    yield ClaimedValue("first.start", (1, 1), (0, n1 - f[1], n1 - f[1] - 1))
    for j in range(2, c1):
        yield ClaimedValue("first.low", (1, j), (0, n1 - j - 1, n1 - j - 3))
    for j in range(c1 + 2, n1 + 1):
        yield ClaimedValue("first.high", (1, j), (0, j - c1, j - c1 - 1))

    n2, c2 = n(2), c[2]
    q2 = _ceil_div(n2, 4)
    for j in range(1, q2 + 2):
        yield ClaimedValue("cycle2.near", (2, j), (j, j, 0))
    for j in range(q2 + 2, c2 + 2):
        yield ClaimedValue("cycle2.mid", (2, j), (j, c2 - j + 3, 0))
    for i in range(3, m + 1):
        qi = _ceil_div(n(i), 4)
        for j in range(1, qi + 2):
            yield ClaimedValue("later.near", (i, j), (s3_floor + j, j, 0))
        for j in range(qi + 2, c[i] + 2):
            yield ClaimedValue("later.mid", (i, j), (s3_floor + j, c[i] - j + 3, 0))

    for i in range(2, m):
        yield ClaimedValue("offset.middle", (i, c[i] + 2), (s2m1, 1, 0))
    for j in range(cm + 2, nm):
        yield ClaimedValue("offset.last", (m, cm + j), (s2m1 + nm - j + 2, nm - j, 0))

    t2 = _ceil_div(3 * n2, 4)
    for j in range(c2 + 3, t2 + 2):
        yield ClaimedValue("cycle2.q2", (2, j), (n2 + 2 - j, 0, j - c2 - 2))
    for j in range(t2 + 2, n2 + 1):
        yield ClaimedValue("cycle2.q2far", (2, j), (n2 + 2 - j, 0, n2 + 1 - j))
    for i in range(3, m + 1):
        ni, ti = n(i), _ceil_div(3 * n(i), 4)
        for j in range(c[i] + 3, ti + 2):
            yield ClaimedValue("later.q2", (i, j), (s3_ceil + ni - j, 0, j - c[i] - 2))
        for j in range(ti + 2, ni + 1):
            yield ClaimedValue("later.q2far", (i, j), (s3_ceil + ni - j, 0, ni + 1 - j))


def claimed_values(cc: ChainCycle) -> Iterator[ClaimedValue]:
    """按公式出现顺序逐条求值"""
    return _even_claims(cc) if cc.parity is Parity.EVEN else _odd_claims(cc)


def claimed_representations(
    cc: ChainCycle,
    dm: Optional[DistanceMatrix] = None,
    p: Optional[Partition] = None
) -> DiscrepancyReport:
    """
    把每条公式的取值与构造划分下的实际表示比对

    Returns:
        DiscrepancyReport：逐顶点状态、逐条不一致、越界位置
    """
    dm = dm if dm is not None else distance_matrix(cc.graph)
    p = p if p is not None else constructed_partition(cc)
    reps = representation_matrix(dm, p).tolist()

    per_vertex = {
        v: VertexClaims(label=cc.position_label(v), computed=tuple(reps[v]))
        for v in cc.graph.vertices()
    }
    report = DiscrepancyReport(instance=cc.spec)

    for claim in claimed_values(cc):
        i, j = claim.position
        if not 1 <= j <= cc.n(i):
            report.out_of_range.append(claim)
            continue
        entry = per_vertex[cc.vertex(i, j)]
        entry.claims.append(claim)
        if claim.value != entry.computed:
            report.mismatches.append(
                ClaimMismatch(case=claim.case, label=entry.label, claimed=claim.value, computed=entry.computed)
            )

    report.vertices = [per_vertex[v] for v in sorted(per_vertex, key=lambda v: cc.positions[v])]
    logger.info(
        "claimed representations checked",
        instance=cc.spec,
        mismatches=len(report.mismatches),
        out_of_range=len(report.out_of_range),
        **report.counts(),
    )
    return report
