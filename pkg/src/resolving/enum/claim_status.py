"""
分段表示公式的核对结果
"""

from enum import Enum


class ClaimStatus(Enum):
    MATCH = "match"          # 所有覆盖该顶点的公式都与计算值一致
    MISMATCH = "mismatch"    # 公式之间一致，但与计算值不同
    CONFLICT = "conflict"    # 多个公式给出不同的值
    UNCOVERED = "uncovered"  # 没有公式覆盖该顶点

    def __str__(self) -> str:
        return self.value
