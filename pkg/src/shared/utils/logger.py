"""
统一日志系统
标准库 logging 负责处理器与格式，structlog 负责键值化事件
控制台输出写到 stderr，stdout 留给 TSV/JSON 结果
"""

import logging
import sys
from pathlib import Path
from typing import Optional

import structlog

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class ColoredFormatter(logging.Formatter):
    """按级别着色的格式化器"""

    # ANSI 前景色：青、绿、黄、红、紫
    LEVEL_COLORS = {
        logging.DEBUG: 36,
        logging.INFO: 32,
        logging.WARNING: 33,
        logging.ERROR: 31,
        logging.CRITICAL: 35,
    }

    def format(self, record):
        text = super().format(record)
        color = self.LEVEL_COLORS.get(record.levelno)
        return f"\033[{color}m{text}\033[0m" if color else text


def level_number(level, fallback: int = logging.INFO) -> int:
    """'debug' / 'WARNING' 之类的级别名转为数值，未知名回退 fallback"""
    value = logging.getLevelName(str(level).upper())
    return value if isinstance(value, int) else fallback


def reset_root(level: int) -> logging.Logger:
    """清空根 logger 的处理器并设置级别"""
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.setLevel(level)
    return root


def console_handler(
    level: int,
    format_str: str = DEFAULT_FORMAT,
    date_format: Optional[str] = None,
    colors: bool = False
) -> logging.StreamHandler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    formatter_cls = ColoredFormatter if colors else logging.Formatter
    handler.setFormatter(formatter_cls(format_str, datefmt=date_format))
    return handler


def configure_structlog() -> None:
    """让 structlog 事件经由标准库 logger 输出"""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.KeyValueRenderer(key_order=['event'], sort_keys=True),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def setup_logging(
    level: str = "INFO",
    log_file: Optional[str] = None,
    format_str: str = DEFAULT_FORMAT,
    enable_colors: bool = True
) -> None:
    """
    不读配置文件的简易初始化：一个 stderr 处理器，可选一个普通文件处理器

    Args:
        level: 日志级别名
        log_file: 日志文件路径，为 None 时只输出到控制台
        format_str: 日志格式字符串
        enable_colors: stderr 是终端时着色
    """
    numeric_level = level_number(level)
    root = reset_root(numeric_level)
    root.addHandler(console_handler(numeric_level, format_str, colors=enable_colors and sys.stderr.isatty()))

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(logging.Formatter(format_str))
        root.addHandler(file_handler)

    configure_structlog()


def get_logger(name: str, level: Optional[str] = None) -> structlog.stdlib.BoundLogger:
    """
    获取结构化 logger，底层为同名标准库 logger

    Args:
        name: logger 名称，通常为 __name__
        level: 为该 logger 单独设置的级别，None 时继承根 logger
    """
    if level:
        logging.getLogger(name).setLevel(level_number(level))
    return structlog.get_logger(name)


class LoggerMixin:
    """为类提供以 模块.类名 命名的 logger"""

    @property
    def logger(self) -> structlog.stdlib.BoundLogger:
        if not hasattr(self, '_logger'):
            self._logger = get_logger(f"{type(self).__module__}.{type(self).__name__}")
        return self._logger


configure_structlog()
