"""
日志配置模块
根据 YAML 配置中的 logging 段初始化日志系统
"""

import logging
import sys
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .logger import DEFAULT_FORMAT, configure_structlog, console_handler, level_number, reset_root, setup_logging


def _rotating_file_handler(section: Dict[str, Any], formatter: logging.Formatter) -> logging.Handler:
    file_section = section.get('file_logging', {})
    rotation = section.get('rotation', {})
    directory = Path(file_section.get('directory', 'logs'))
    directory.mkdir(parents=True, exist_ok=True)

    handler = TimedRotatingFileHandler(
        directory / file_section.get('filename', 'chaindim.log'),
        when=rotation.get('when', 'midnight'),
        interval=rotation.get('interval', 1),
        backupCount=rotation.get('backup_count', 7),
        encoding=file_section.get('encoding', 'utf-8'),
    )
    handler.setFormatter(formatter)
    return handler


def setup_logging_from_config(config: Dict[str, Any], level_override: Optional[str] = None) -> None:
    """
    按 logging 段建立根 logger 的处理器

    控制台级别取 level_override、console_logging.level、level 中第一个给出的；
    根级别不高于控制台级别。loggers 子段逐模块设置级别。

    Args:
        config: 完整配置字典（读取其中的 logging 段）
        level_override: 命令行指定的控制台级别
    """
    if not config:
        setup_logging(level=level_override or "INFO")
        return

    section = config.get('logging', {})
    root_level = level_number(section.get('level', 'INFO'))
    format_str = section.get('format', DEFAULT_FORMAT)
    date_format = section.get('date_format', '%Y-%m-%d %H:%M:%S')
    console_section = section.get('console_logging', {})
    file_enabled = bool(section.get('file_logging', {}).get('enabled', False))

    root = reset_root(root_level)

    if console_section.get('enabled', True):
        console_level = level_number(level_override or console_section.get('level', root_level), root_level)
        root.setLevel(min(root_level, console_level))
        colors = section.get('enable_colors', True) and sys.stderr.isatty()
        root.addHandler(console_handler(console_level, format_str, date_format, colors))

    if file_enabled:
        root.addHandler(_rotating_file_handler(section, logging.Formatter(format_str, datefmt=date_format)))

    for name, level in section.get('loggers', {}).items():
        logging.getLogger(name).setLevel(level_number(level, root_level))

    configure_structlog()
    logging.getLogger(__name__).debug(
        "logging initialised level=%s file_logging=%s", logging.getLevelName(root_level), file_enabled
    )


def init_logging(config_path: Optional[str] = None, level_override: Optional[str] = None) -> None:
    """
    初始化日志系统

    Args:
        config_path: 单独的日志配置文件；为空或不存在时使用 SystemConfig 的 logging 段
        level_override: 控制台日志级别覆盖
    """
    if config_path and Path(config_path).exists():
        with open(config_path, 'r', encoding='utf-8') as f:
            config = yaml.safe_load(f) or {}
    else:
        from configs import config as system_config
        config = {'logging': system_config.get_logging_config()}

    setup_logging_from_config(config, level_override=level_override)
