"""
划分维数证书
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

from src.shared.exceptions import ValidationError
from ..enum import LowerBoundReason
from .partition import Partition


@dataclass(frozen=True)
class PdCertificate:
    """pd 的值、下界依据和达到该值的分辨划分"""

    value: int
    lower_bound_reason: LowerBoundReason
    witness: Partition

    def __post_init__(self):
        if self.value != self.witness.k:
            raise ValidationError(
                f"certificate value {self.value} differs from witness size {self.witness.k}", field="value"
            )

    def to_dict(self, label_fn: Optional[Callable[[int], str]] = None) -> Dict[str, Any]:
        return {
            'value': self.value,
            'lower_bound_reason': self.lower_bound_reason.value,
            'witness': self.witness.to_dict(label_fn),
        }
