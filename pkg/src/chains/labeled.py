"""
带标签的图与链图构造
链图 C(G_1,...,G_m; x_1,w_1,...,x_m,w_m)：依次把 w_i 与 x_{i+1} 粘合为一个顶点
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from src.graph import Graph, build_graph
from src.shared.exceptions import ChainError, GraphConstructionError, LabelError, ValidationError
from src.shared.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LabeledGraph:
    """图加显示标签；aliases 额外记录被粘合顶点在各部件中的原名"""

    graph: Graph
    label_of: Tuple[str, ...]
    id_of: Dict[str, int] = field(repr=False)
    aliases: Dict[str, int] = field(default_factory=dict, repr=False)

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def label(self, v: int) -> str:
        return self.label_of[v]

    def lookup(self, label: str) -> int:
        """显示标签或别名 -> 顶点编号"""
        if label in self.id_of:
            return self.id_of[label]
        if label in self.aliases:
            return self.aliases[label]
        raise LabelError(f"unknown vertex label {label!r}", label=label)

    @classmethod
    def from_graph(cls, g: Graph, labels: Optional[Sequence[str]] = None) -> 'LabeledGraph':
        labels = tuple(labels) if labels is not None else tuple(str(v) for v in g.vertices())
        if len(labels) != g.vertex_count or len(set(labels)) != len(labels):
            raise ValidationError("labels must be unique and cover every vertex", field="labels")
        return cls(graph=g, label_of=labels, id_of={lbl: v for v, lbl in enumerate(labels)})


def build_cycle(n: int, prefix: str = "v") -> LabeledGraph:
    """C_n，标签 {prefix}1..{prefix}n，边 v_j v_{j+1} 与 v_n v_1"""
    if n < 3:
        raise GraphConstructionError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(j, (j + 1) % n) for j in range(n)]
    return LabeledGraph.from_graph(build_graph(n, edges), [f"{prefix}{j}" for j in range(1, n + 1)])


def build_chain(parts: Sequence[LabeledGraph], attachments: Sequence[Tuple[str, str]]) -> LabeledGraph:
    """
    按顺序粘合各部件：第 i 个部件的 w_i 与第 i+1 个部件的 x_{i+1} 成为同一顶点

    被粘合顶点归属于较早的部件，显示标签为 "w=x"。
    编号按部件顺序、部件内编号顺序分配，跳过被粘合的 x_{i+1}。

    Args:
        parts: 标签两两不相交的部件
        attachments: 每个部件的 (x_i, w_i) 标签

    Returns:
        链图；|V| = Σ|V(G_i)| - (m-1)，|E| = Σ|E(G_i)|
    """
    if not parts:
        raise ValidationError("a chain needs at least one part", field="parts")
    if len(attachments) != len(parts):
        raise ValidationError(
            f"expected {len(parts)} attachment pairs, got {len(attachments)}", field="attachments"
        )

    local_attach: List[Tuple[int, int]] = []
    for index, (part, (x_label, w_label)) in enumerate(zip(parts, attachments)):
        x_local, w_local = part.lookup(x_label), part.lookup(w_label)
        # x_i = w_i 只允许出现在多于一个顶点的部件里
        if x_local == w_local and part.vertex_count < 2:
            raise GraphConstructionError(
                f"part {index + 1} has a single vertex, x_i = w_i is not allowed",
                part=index + 1,
                label=x_label,
            )
        local_attach.append((x_local, w_local))

    seen_labels: Dict[str, int] = {}
    for index, part in enumerate(parts):
        for lbl in part.label_of:
            if lbl in seen_labels:
                raise ChainError(
                    f"parts {seen_labels[lbl] + 1} and {index + 1} share label {lbl!r}",
                    details={'label': lbl},
                )
            seen_labels[lbl] = index

    if len(parts) == 1:
        return parts[0]

    labels: List[str] = []
    aliases: Dict[str, int] = {}
    edges: List[Tuple[int, int]] = []
    previous_w: Optional[int] = None

    for index, part in enumerate(parts):
        x_local, w_local = local_attach[index]
        local_map: List[Optional[int]] = [None] * part.vertex_count
        if previous_w is not None:
            local_map[x_local] = previous_w
            labels[previous_w] = f"{labels[previous_w]}={part.label(x_local)}"

        for v in part.graph.vertices():
            if local_map[v] is None:
                local_map[v] = len(labels)
                labels.append(part.label(v))
            aliases[part.label(v)] = local_map[v]

        edges.extend((local_map[u], local_map[v]) for u, v in part.graph.edges)
        previous_w = local_map[w_local]

    chain = LabeledGraph(
        graph=build_graph(len(labels), edges),
        label_of=tuple(labels),
        id_of={lbl: v for v, lbl in enumerate(labels)},
        aliases=aliases,
    )
    logger.debug("chain built", parts=len(parts), vertices=chain.vertex_count, edges=chain.graph.edge_count)
    return chain
