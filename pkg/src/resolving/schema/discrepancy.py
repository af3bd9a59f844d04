"""
分段表示公式核对报告
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from ..enum import ClaimStatus
from .partition import Representation


@dataclass(frozen=True)
class ClaimedValue:
    """一条公式在一个下标上的取值；position 为 (i, 实际位置)"""

    case: str
    position: Tuple[int, int]
    value: Representation


@dataclass
class VertexClaims:
    label: str
    computed: Representation
    claims: List[ClaimedValue] = field(default_factory=list)

    @property
    def status(self) -> ClaimStatus:
        if not self.claims:
            return ClaimStatus.UNCOVERED
        values = {c.value for c in self.claims}
        if len(values) > 1:
            return ClaimStatus.CONFLICT
        return ClaimStatus.MATCH if self.computed in values else ClaimStatus.MISMATCH

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'computed': list(self.computed),
            'status': self.status.value,
            'claims': [{'case': c.case, 'value': list(c.value)} for c in self.claims],
        }


@dataclass(frozen=True)
class ClaimMismatch:
    case: str
    label: str
    claimed: Representation
    computed: Representation

    def to_dict(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'label': self.label,
            'claimed': list(self.claimed),
            'computed': list(self.computed),
        }


@dataclass
class DiscrepancyReport:
    """计算值为准；公式值只作为待核对的结论"""

    instance: str
    vertices: List[VertexClaims] = field(default_factory=list)
    mismatches: List[ClaimMismatch] = field(default_factory=list)
    # 公式下标超出环长，无法对应到顶点
    out_of_range: List[ClaimedValue] = field(default_factory=list)

    def by_status(self, status: ClaimStatus) -> List[str]:
        return [vc.label for vc in self.vertices if vc.status is status]

    @property
    def uncovered(self) -> List[str]:
        return self.by_status(ClaimStatus.UNCOVERED)

    @property
    def conflicts(self) -> List[str]:
        return self.by_status(ClaimStatus.CONFLICT)

    def claimed(self) -> Dict[str, List[Representation]]:
        """标签 -> 各公式给出的表示"""
        return {vc.label: [c.value for c in vc.claims] for vc in self.vertices if vc.claims}

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in ClaimStatus}
        for vc in self.vertices:
            counts[vc.status.value] += 1
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {
            'instance': self.instance,
            'counts': self.counts(),
            'vertices': [vc.to_dict() for vc in self.vertices],
            'mismatches': [m.to_dict() for m in self.mismatches],
            'out_of_range': [
                {'case': c.case, 'position': f"v{c.position[0]}_{c.position[1]}", 'value': list(c.value)}
                for c in self.out_of_range
            ],
        }
