"""
DOT 导出（无向图）
"""

from typing import Optional, Sequence

from ..core.graph import Graph


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(g: Graph, labels: Optional[Sequence[str]] = None, name: str = "G") -> str:
    """
    导出为 DOT 文本；labels 给出时作为顶点 label 属性

    Args:
        g: 图
        labels: 按顶点编号排列的显示标签
        name: 图名
    """
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        if labels is not None:
            lines.append(f"  {v} [label={_quote(labels[v])}];")
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
