"""
强分辨模块
MMD 与强分辨图、链环预测边集、精确顶点覆盖、强度量维数与闭式公式
"""

from .enum import CoverMethod, SdimRoute
from .schema import CoverResult, PredictedEdges, SdimResult, SrgReport
from .mmd import (
    cross_cycle_pairs,
    cut_vertex_exclusion,
    diameter_pairs,
    is_maximally_distant,
    md_matrix,
    mmd_pairs,
    strong_resolving_graph,
)
from .predicted import (
    path_edges,
    predicted_mmd_paths,
    predicted_srg,
    predicted_srg_even,
    predicted_srg_odd,
    require_odd_hypotheses,
)
from .vertex_cover import independence_number_exact, is_vertex_cover, min_vertex_cover, uncovered_edges
from .strong_dimension import (
    is_strong_resolving_set,
    minimum_strong_resolving_set,
    resolution_masks,
    strong_metric_dimension,
    strongly_resolves,
)
from .formulas import constructed_cover, literal_range_uncovered, sdim_formula

__all__ = [
    'CoverMethod',
    'SdimRoute',
    'CoverResult',
    'PredictedEdges',
    'SdimResult',
    'SrgReport',
    'cross_cycle_pairs',
    'cut_vertex_exclusion',
    'diameter_pairs',
    'is_maximally_distant',
    'md_matrix',
    'mmd_pairs',
    'strong_resolving_graph',
    'path_edges',
    'predicted_mmd_paths',
    'predicted_srg',
    'predicted_srg_even',
    'predicted_srg_odd',
    'require_odd_hypotheses',
    'independence_number_exact',
    'is_vertex_cover',
    'min_vertex_cover',
    'uncovered_edges',
    'is_strong_resolving_set',
    'minimum_strong_resolving_set',
    'resolution_masks',
    'strong_metric_dimension',
    'strongly_resolves',
    'literal_range_uncovered',
    'constructed_cover',
    'sdim_formula',
]
