"""
链图相关异常
"""

from .base_errors import BaseError


class ChainError(BaseError):
    default_code = "CHAIN_ERROR"


class ChainSpecError(ChainError):
    """实例描述字符串无法解析；上下文键 spec"""

    default_code = "CHAIN_SPEC_ERROR"


class ParityError(ChainError):
    """环长奇偶性或下界不满足；上下文键 cycle_lengths、parity"""

    default_code = "PARITY_ERROR"


class LabelError(ChainError):
    """未知标签或 (i, j) 越界；上下文键 label、position"""

    default_code = "LABEL_ERROR"
