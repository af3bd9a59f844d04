"""
顶点覆盖的来源
"""

from enum import Enum


class CoverMethod(Enum):
    BRANCH_BOUND = "branch_bound"              # 精确分支定界
    CONSTRUCTION = "construction"              # 按链环族的显式构造

    def __str__(self) -> str:
        return self.value
