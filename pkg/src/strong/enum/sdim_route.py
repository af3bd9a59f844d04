"""
强度量维数的计算途径
"""

from enum import Enum


class SdimRoute(Enum):
    """sdim 的求解方式，命令行 --sdim-method 的取值"""

    COVER_OF_SRG = "cover"   # 强分辨图的最小顶点覆盖
    BRUTE_FORCE = "brute"    # 按基数递增枚举强分辨集
    CLOSED_FORM = "formula"  # 链环族的闭式公式

    @classmethod
    def from_string(cls, route_str: str) -> 'SdimRoute':
        """从字符串转换为枚举"""
        try:
            return cls(route_str.lower())
        except ValueError:
            raise ValueError(f"unknown sdim method: {route_str}")

    def __str__(self) -> str:
        return self.value
