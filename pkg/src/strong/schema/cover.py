"""
顶点覆盖与强度量维数结果
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple, Union

from ..enum import CoverMethod, SdimRoute


@dataclass(frozen=True)
class CoverResult:
    cover: Tuple[int, ...]
    method: CoverMethod
    vertex_count: int

    @property
    def size(self) -> int:
        return len(self.cover)

    @property
    def independence_check(self) -> int:
        """β = n - α"""
        return self.vertex_count - self.size

    def to_dict(self, label_fn: Optional[Callable[[int], str]] = None) -> Dict[str, Any]:
        fmt = label_fn or str
        return {
            'cover': sorted(fmt(v) for v in self.cover),
            'alpha': self.size,
            'beta': self.independence_check,
            'method': self.method.value,
        }


@dataclass(frozen=True)
class SdimResult:
    """certificate：BRUTE_FORCE 为强分辨集，COVER_OF_SRG 为覆盖，CLOSED_FORM 为空"""

    value: int
    route: SdimRoute
    certificate: Union[CoverResult, Tuple[int, ...], None] = None

    def to_dict(self, label_fn: Optional[Callable[[int], str]] = None) -> Dict[str, Any]:
        fmt = label_fn or str
        if isinstance(self.certificate, CoverResult):
            certificate: Any = self.certificate.to_dict(label_fn)
        elif self.certificate is not None:
            certificate = [fmt(v) for v in self.certificate]
        else:
            certificate = None
        return {'value': self.value, 'route': self.route.value, 'certificate': certificate}
