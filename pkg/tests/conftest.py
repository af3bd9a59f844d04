"""
测试公共夹具
"""

import logging
from logging.handlers import TimedRotatingFileHandler

import pytest

from src.chains import build_even_chain_cycle, build_odd_chain_cycle
from src.graph import distance_matrix
from src.shared.settings import ChainDimSettings

_OWN_HANDLERS = (logging.StreamHandler, logging.FileHandler, TimedRotatingFileHandler)


@pytest.fixture(autouse=True)
def _restore_root_logging():
    """命令行会重建根 logger 的处理器，测试结束后移除并还原级别"""
    root = logging.getLogger()
    level = root.level
    yield
    for handler in root.handlers[:]:
        if type(handler) in _OWN_HANDLERS:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


@pytest.fixture
def even_table():
    """C(C8, C10, C8)"""
    return build_even_chain_cycle([8, 10, 8])


@pytest.fixture
def odd_table():
    """C(C5, C7, C5)"""
    return build_odd_chain_cycle([5, 7, 5])


@pytest.fixture
def even_small():
    return build_even_chain_cycle([4, 4])


@pytest.fixture
def odd_small():
    return build_odd_chain_cycle([5, 5])


@pytest.fixture
def even_table_dm(even_table):
    return distance_matrix(even_table.graph)


@pytest.fixture
def odd_table_dm(odd_table):
    return distance_matrix(odd_table.graph)


@pytest.fixture
def small_settings():
    """穷举规模压低，随机语料缩小"""
    return ChainDimSettings().with_limits(
        pd_exact_max_vertices=11,
        sdim_brute_max_vertices=11,
    ).with_verification(
        random_corpus_size=6,
        random_max_vertices=6,
        pd_bound_max_vertices=6,
    )
