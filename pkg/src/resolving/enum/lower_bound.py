"""
划分维数下界来源
"""

from enum import Enum


class LowerBoundReason(Enum):
    """pd 下界的依据"""

    NOT_A_PATH = "not_a_path"            # 非路图，pd >= 3
    EXHAUSTIVE_NO_K = "exhaustive_no_k"  # 更小的 k 穷举均无分辨划分

    @classmethod
    def from_string(cls, reason_str: str) -> 'LowerBoundReason':
        try:
            return cls(reason_str.lower())
        except ValueError:
            raise ValueError(f"unknown lower bound reason: {reason_str}")

    def __str__(self) -> str:
        return self.value
