"""
边表文本格式
首行 "n m"，随后 m 行 "u v"，0 起始编号，空白分隔，LF 换行
"""

from typing import List, Tuple

from src.shared.exceptions import GraphConstructionError
from ..core.graph import Graph, build_graph


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """
    解析边表文本

    Raises:
        GraphConstructionError: 头部缺失、行格式错误或边数与头部不符
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphConstructionError("edge list is empty, expected header 'n m'")

    header = rows[0]
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise GraphConstructionError(f"malformed edge list header: {' '.join(header)!r}")
    n, m = int(header[0]), int(header[1])

    edges: List[Tuple[int, int]] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2 or not all(tok.lstrip('-').isdigit() for tok in row):
            raise GraphConstructionError(f"line {lineno}: expected 'u v', got {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))

    if len(edges) != m:
        raise GraphConstructionError(f"header announces {m} edges but {len(edges)} were listed")

    return build_graph(n, edges)
