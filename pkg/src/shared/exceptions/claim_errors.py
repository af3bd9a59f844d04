"""
构造性结论校验异常
见证划分不可分辨、覆盖集漏边、公式超出适用条件
"""

from .base_errors import BaseError


class ClaimError(BaseError):
    """结论校验失败，命令行退出码为 1"""

    default_code = "CLAIM_ERROR"
    exit_code = 1


class WitnessNotResolvingError(ClaimError):
    """构造的划分不是分辨划分；上下文键 pair、instance"""

    default_code = "WITNESS_NOT_RESOLVING"


class CoverVerificationError(ClaimError):
    """构造的顶点集没有覆盖强分辨图的某条边；上下文键 edge、instance"""

    default_code = "COVER_VERIFICATION_ERROR"


class HypothesisViolationError(ClaimError):
    """在适用条件之外调用闭式公式或预测边集"""

    default_code = "HYPOTHESIS_VIOLATION"
    exit_code = 2
