"""
图相关异常
图构造、顶点访问和规模限制
"""

from .base_errors import BaseError


class GraphError(BaseError):
    default_code = "GRAPH_ERROR"


class GraphConstructionError(GraphError):
    """自环、越界端点、边数与头部不符；上下文键 pair"""

    default_code = "GRAPH_CONSTRUCTION_ERROR"


class VertexOutOfRangeError(GraphError):
    default_code = "VERTEX_OUT_OF_RANGE"

    def __init__(self, vertex: int, vertex_count: int, **kwargs):
        super().__init__(
            f"vertex {vertex} out of range for graph on {vertex_count} vertices",
            vertex=vertex,
            vertex_count=vertex_count,
            **kwargs
        )


class DisconnectedGraphError(GraphError):
    """要求连通图但输入不连通；上下文键 operation"""

    default_code = "DISCONNECTED_GRAPH"

    def __init__(self, message: str = "graph is disconnected", **kwargs):
        super().__init__(message, **kwargs)


class SizeGateError(GraphError):
    """穷举求解器的规模限制"""

    default_code = "SIZE_GATE"

    def __init__(self, operation: str, n: int, limit: int, **kwargs):
        super().__init__(
            f"size gate: {operation} accepts at most {limit} vertices, got {n}",
            operation=operation,
            n=n,
            limit=limit,
            **kwargs
        )
