"""
校验模块
单实例报告、定理扫描与随机语料
"""

from .schema import InvariantReport, RandomCheck, RandomSuiteReport, VerificationRun
from .invariants import instance_report, invariants_report
from .sweep import run_sweep, sweep_instances, validate_ranges
from .corpus import from_networkx, random_connected_corpus, run_random_suite

__all__ = [
    'InvariantReport',
    'RandomCheck',
    'RandomSuiteReport',
    'VerificationRun',
    'instance_report',
    'invariants_report',
    'run_sweep',
    'sweep_instances',
    'validate_ranges',
    'from_networkx',
    'random_connected_corpus',
    'run_random_suite',
]
