from .graph import (
    Edge,
    Graph,
    build_graph,
    diameter,
    is_connected,
    is_path_graph,
    neighbors,
    require_connected,
)
from .distance import UNREACHABLE, DistanceMatrix, distance_matrix

__all__ = [
    'Edge',
    'Graph',
    'build_graph',
    'diameter',
    'is_connected',
    'is_path_graph',
    'neighbors',
    'require_connected',
    'UNREACHABLE',
    'DistanceMatrix',
    'distance_matrix',
]
