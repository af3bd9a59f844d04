"""
链图构造模块
通用链图粘合、偶/奇链环族与规范 v^i_j 标签
"""

from .enum import Parity
from .labeled import LabeledGraph, build_chain, build_cycle
from .chain_cycle import (
    ChainCycle,
    Position,
    build_chain_cycle,
    build_even_chain_cycle,
    build_odd_chain_cycle,
    halves,
    position_label,
    resolve_label,
)
from .spec_parser import Instance, instance_name, labeled_of, parse_chain_spec

__all__ = [
    'Parity',
    'LabeledGraph',
    'build_chain',
    'build_cycle',
    'ChainCycle',
    'Position',
    'build_chain_cycle',
    'build_even_chain_cycle',
    'build_odd_chain_cycle',
    'halves',
    'position_label',
    'resolve_label',
    'Instance',
    'instance_name',
    'labeled_of',
    'parse_chain_spec',
]
