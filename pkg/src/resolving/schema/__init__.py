from .partition import Partition, Representation
from .certificate import PdCertificate
from .discrepancy import ClaimedValue, ClaimMismatch, DiscrepancyReport, VertexClaims

__all__ = [
    'Partition',
    'Representation',
    'PdCertificate',
    'ClaimedValue',
    'ClaimMismatch',
    'DiscrepancyReport',
    'VertexClaims',
]
