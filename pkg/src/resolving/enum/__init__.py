from .lower_bound import LowerBoundReason
from .claim_status import ClaimStatus

__all__ = ['LowerBoundReason', 'ClaimStatus']
