"""
统一异常体系
定义项目使用的所有异常类型
"""

from .base_errors import BaseError, ConfigError, ValidationError
from .graph_errors import (
    GraphError,
    GraphConstructionError,
    VertexOutOfRangeError,
    DisconnectedGraphError,
    SizeGateError
)
from .chain_errors import (
    ChainError,
    ChainSpecError,
    ParityError,
    LabelError
)
from .claim_errors import (
    ClaimError,
    WitnessNotResolvingError,
    CoverVerificationError,
    HypothesisViolationError
)

__all__ = [
    'BaseError',
    'ConfigError',
    'ValidationError',
    'GraphError',
    'GraphConstructionError',
    'VertexOutOfRangeError',
    'DisconnectedGraphError',
    'SizeGateError',
    'ChainError',
    'ChainSpecError',
    'ParityError',
    'LabelError',
    'ClaimError',
    'WitnessNotResolvingError',
    'CoverVerificationError',
    'HypothesisViolationError'
]
