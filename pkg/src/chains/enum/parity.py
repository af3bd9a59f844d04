"""
链环奇偶性枚举
决定环长约束、连接点位置和"半环"长度
"""

from enum import Enum


class Parity(Enum):
    """链环族：全偶环或全奇环"""

    EVEN = "even"
    ODD = "odd"

    def accepts(self, n: int) -> bool:
        """环长 n 是否属于本族（含下界）"""
        if self is Parity.EVEN:
            return n % 2 == 0 and n >= 4
        return n % 2 == 1 and n >= 3

    @property
    def min_length(self) -> int:
        return 4 if self is Parity.EVEN else 3

    def attachment(self, n: int) -> int:
        """与下一个环粘合的位置 a_i：偶 n/2+1，奇 (n+1)/2+1"""
        return self.half(n) + 1

    def half(self, n: int) -> int:
        """偶环取 n/2，奇环取上取整 ceil(n/2)"""
        return n // 2 if self is Parity.EVEN else (n + 1) // 2

    @classmethod
    def from_string(cls, parity_str: str) -> 'Parity':
        """从字符串转换为枚举"""
        try:
            return cls(parity_str.lower())
        except ValueError:
            raise ValueError(f"unknown parity: {parity_str}")

    def __str__(self) -> str:
        return self.value
