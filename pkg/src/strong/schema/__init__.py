from .srg import PredictedEdges, SrgReport
from .cover import CoverResult, SdimResult

__all__ = ['PredictedEdges', 'SrgReport', 'CoverResult', 'SdimResult']
