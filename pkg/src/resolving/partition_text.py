"""
划分文本格式：每行一个块，块内为逗号分隔的顶点标签，块的顺序有意义
"""

from typing import List

from src.chains import LabeledGraph
from src.shared.exceptions import ValidationError
from .schema import Partition


def format_partition(lg: LabeledGraph, p: Partition) -> str:
    if p.vertex_count != lg.vertex_count:
        raise ValidationError(
            f"partition covers {p.vertex_count} vertices but the graph has {lg.vertex_count}", field="partition"
        )
    return "".join(",".join(lg.label(v) for v in block) + "\n" for block in p.blocks)


def parse_partition(lg: LabeledGraph, text: str) -> Partition:
    """
    解析划分文本；空行忽略，标签可以是显示标签或粘合点的任一原名

    Raises:
        LabelError: 未知标签
        ValidationError: 不构成划分
    """
    blocks: List[List[int]] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        blocks.append([lg.lookup(label.strip()) for label in line.split(',') if label.strip()])
    return Partition.of(blocks, lg.vertex_count)
