"""
有序划分 Π = {Q_1, ..., Q_k}
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from src.shared.exceptions import ValidationError

# r(v|Π) 或 r(v|W)：到各块（或各地标）的距离
Representation = Tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """块两两不交、非空、并为 V(G)；块的顺序有意义"""

    blocks: Tuple[Tuple[int, ...], ...]
    vertex_count: int

    @property
    def k(self) -> int:
        return len(self.blocks)

    @cached_property
    def labels(self) -> np.ndarray:
        """每个顶点所在块的下标"""
        labels = np.empty(self.vertex_count, dtype=np.int64)
        for index, block in enumerate(self.blocks):
            labels[list(block)] = index
        labels.setflags(write=False)
        return labels

    def block_of(self, v: int) -> int:
        return int(self.labels[v])

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], vertex_count: int) -> 'Partition':
        """
        校验并创建划分

        Raises:
            ValidationError: 空块、重复顶点、越界或未覆盖全部顶点
        """
        normalized = []
        seen = set()
        for index, block in enumerate(blocks):
            members = tuple(sorted(int(v) for v in block))
            if not members:
                raise ValidationError(f"block Q_{index + 1} is empty", field="blocks")
            for v in members:
                if not 0 <= v < vertex_count:
                    raise ValidationError(f"vertex {v} is outside 0..{vertex_count - 1}", field="blocks", value=v)
                if v in seen:
                    raise ValidationError(f"vertex {v} appears in more than one block", field="blocks", value=v)
                seen.add(v)
            normalized.append(members)

        if not normalized:
            raise ValidationError("a partition needs at least one block", field="blocks")
        if len(seen) != vertex_count:
            missing = sorted(set(range(vertex_count)) - seen)
            raise ValidationError(f"blocks do not cover vertices {missing}", field="blocks")

        return cls(blocks=tuple(normalized), vertex_count=vertex_count)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> 'Partition':
        """从块下标序列（如限制增长串）创建"""
        k = max(labels) + 1 if len(labels) else 0
        blocks = [[] for _ in range(k)]
        for v, b in enumerate(labels):
            blocks[b].append(v)
        return cls.of(blocks, len(labels))

    @classmethod
    def discrete(cls, vertex_count: int) -> 'Partition':
        return cls.of(([v] for v in range(vertex_count)), vertex_count)

    @classmethod
    def single(cls, vertex_count: int) -> 'Partition':
        return cls.of([range(vertex_count)], vertex_count)

    def to_dict(self, label_fn: Optional[Callable[[int], str]] = None) -> Dict[str, Any]:
        fmt = label_fn or str
        return {
            'k': self.k,
            'blocks': [[fmt(v) for v in block] for block in self.blocks],
        }
