"""
共享模块
提供异常体系、日志、配置模型和通用工具
"""

__version__ = "0.1.0"

from .utils.logger import get_logger
from .exceptions.base_errors import BaseError
from .settings import ChainDimSettings, load_settings

__all__ = [
    'get_logger',
    'BaseError',
    'ChainDimSettings',
    'load_settings'
]
