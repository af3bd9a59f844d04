"""
日志配置测试
验证根 logger 的处理器、文件轮转与 structlog 键值输出
"""

import logging
import sys
from logging.handlers import TimedRotatingFileHandler

from src.shared.utils.log_config import setup_logging_from_config
from src.shared.utils.logger import LoggerMixin, get_logger, setup_logging


def _config(**logging_section):
    section = {
        'level': 'INFO',
        'format': '%(levelname)s %(name)s %(message)s',
        'enable_colors': False,
        'console_logging': {'enabled': True, 'level': 'WARNING'},
        'file_logging': {'enabled': False},
    }
    section.update(logging_section)
    return {'logging': section}


def test_console_handler_writes_to_stderr():
    setup_logging_from_config(_config())
    handlers = logging.getLogger().handlers
    assert len(handlers) == 1
    assert isinstance(handlers[0], logging.StreamHandler)
    assert handlers[0].stream is sys.stderr
    assert handlers[0].level == logging.WARNING


def test_level_override_lowers_root_level():
    setup_logging_from_config(_config(), level_override='DEBUG')
    root = logging.getLogger()
    assert root.level == logging.DEBUG
    assert root.handlers[0].level == logging.DEBUG


def test_module_levels_are_applied():
    setup_logging_from_config(_config(loggers={'src.strong': 'ERROR'}))
    try:
        assert logging.getLogger('src.strong').level == logging.ERROR
    finally:
        logging.getLogger('src.strong').setLevel(logging.NOTSET)


def test_file_logging_uses_rotation(tmp_path):
    setup_logging_from_config(_config(
        file_logging={'enabled': True, 'directory': str(tmp_path), 'filename': 'run.log'},
        console_logging={'enabled': False},
    ))
    handlers = logging.getLogger().handlers
    assert len(handlers) == 1
    assert isinstance(handlers[0], TimedRotatingFileHandler)

    get_logger('tests.file_sink').info("sample written", n=24)
    handlers[0].flush()
    text = (tmp_path / 'run.log').read_text(encoding='utf-8')
    assert "event='sample written'" in text
    assert "n=24" in text


def test_empty_config_falls_back_to_defaults():
    setup_logging_from_config({}, level_override='ERROR')
    assert logging.getLogger().level == logging.ERROR


def test_setup_logging_with_file(tmp_path):
    log_file = tmp_path / 'nested' / 'plain.log'
    setup_logging(level='INFO', log_file=str(log_file), enable_colors=False)
    assert log_file.exists()
    assert len(logging.getLogger().handlers) == 2


def test_structlog_events_render_key_values(caplog):
    logger = get_logger('tests.events')
    with caplog.at_level(logging.INFO, logger='tests.events'):
        logger.info("witness verified", instance="even:8,10,8", k=3)
    assert "event='witness verified'" in caplog.text
    assert "instance='even:8,10,8'" in caplog.text
    assert "k=3" in caplog.text


def test_filtered_levels_are_dropped(caplog):
    logger = get_logger('tests.quiet')
    with caplog.at_level(logging.WARNING, logger='tests.quiet'):
        logger.info("hidden")
        logger.warning("shown")
    assert "hidden" not in caplog.text
    assert "shown" in caplog.text


def test_logger_mixin_names_after_class():
    class Widget(LoggerMixin):
        pass

    widget = Widget()
    assert widget.logger is widget.logger
