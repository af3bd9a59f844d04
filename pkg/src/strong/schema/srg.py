"""
强分辨图报告：计算边集、预测边集与二者之差
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

from src.graph import Edge, Graph, build_graph

LabelFn = Callable[[int], str]


def _sorted_label_pairs(edges, label_fn: LabelFn) -> List[List[str]]:
    pairs = [sorted((label_fn(u), label_fn(v))) for u, v in edges]
    return sorted(pairs)


@dataclass(frozen=True)
class PredictedEdges:
    """按集合定义展开并去重后的预测边；dropped_literal 为字面展开中剔除的边（端点是粘合点，或 B4 的 i > k 配对）"""

    edges: FrozenSet[Edge]
    dropped_literal: FrozenSet[Edge] = frozenset()


@dataclass
class SrgReport:
    instance: str
    vertex_count: int
    computed_edges: FrozenSet[Edge]
    predicted: Optional[PredictedEdges] = None

    @property
    def graph(self) -> Graph:
        """G_SR，顶点集为 V(G)"""
        return build_graph(self.vertex_count, self.computed_edges)

    @property
    def predicted_edges(self) -> Optional[FrozenSet[Edge]]:
        return self.predicted.edges if self.predicted is not None else None

    @property
    def missing(self) -> FrozenSet[Edge]:
        """G_SR 中有而预测边集缺少的边（computed - predicted）"""
        if self.predicted is None:
            return frozenset()
        return self.computed_edges - self.predicted.edges

    @property
    def extra(self) -> FrozenSet[Edge]:
        """预测边集中有而实际不是 MMD 的边（predicted - computed）"""
        if self.predicted is None:
            return frozenset()
        return self.predicted.edges - self.computed_edges

    @property
    def diff_empty(self) -> bool:
        return not self.missing and not self.extra

    def isolated_vertices(self) -> Tuple[int, ...]:
        touched = {u for e in self.computed_edges for u in e}
        return tuple(v for v in range(self.vertex_count) if v not in touched)

    def to_dict(self, label_fn: Optional[LabelFn] = None) -> Dict[str, Any]:
        fmt = label_fn or str
        data: Dict[str, Any] = {
            'instance': self.instance,
            'computed_edges': _sorted_label_pairs(self.computed_edges, fmt),
            'isolated_vertices': sorted(fmt(v) for v in self.isolated_vertices()),
        }
        if self.predicted is not None:
            data['predicted_edges'] = _sorted_label_pairs(self.predicted.edges, fmt)
            data['dropped_literal'] = _sorted_label_pairs(self.predicted.dropped_literal, fmt)
            data['diff'] = {
                'missing': _sorted_label_pairs(self.missing, fmt),
                'extra': _sorted_label_pairs(self.extra, fmt),
            }
        return data
