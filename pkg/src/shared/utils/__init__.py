"""
共享工具函数模块
提供项目通用的工具函数
"""

from .logger import get_logger, setup_logging, LoggerMixin
from .log_config import setup_logging_from_config, init_logging
from .validators import validate_input, parse_int_list, validate_vertex_ids, require_non_empty
from .file_utils import read_file, write_file, dumps_json, emit
from .pool_utils import ordered_map

__all__ = [
    'get_logger',
    'setup_logging',
    'LoggerMixin',
    'setup_logging_from_config',
    'init_logging',
    'validate_input',
    'parse_int_list',
    'validate_vertex_ids',
    'require_non_empty',
    'read_file',
    'write_file',
    'dumps_json',
    'emit',
    'ordered_map'
]
