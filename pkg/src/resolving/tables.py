"""
表示表：每个顶点一行 (标签, r(v|Π))
链环按 (i, j) 排序，标签为规范位置 v{i}_{j}；一般图按编号排序
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from src.chains import ChainCycle, Instance, labeled_of
from src.graph import DistanceMatrix, distance_matrix
from src.shared.utils.file_utils import dumps_json
from .representation import representation_matrix
from .schema import Partition, Representation


@dataclass(frozen=True)
class RepresentationRow:
    label: str
    coords: Representation

    def to_dict(self) -> Dict[str, Any]:
        return {'label': self.label, 'representation': list(self.coords)}


def representation_table(
    instance: Instance,
    p: Partition,
    dm: Optional[DistanceMatrix] = None
) -> List[RepresentationRow]:
    lg = labeled_of(instance)
    dm = dm if dm is not None else distance_matrix(lg.graph)
    reps = representation_matrix(dm, p).tolist()

    if isinstance(instance, ChainCycle):
        order = sorted(lg.graph.vertices(), key=lambda v: instance.positions[v])
        label_fn = instance.position_label
    else:
        order = list(lg.graph.vertices())
        label_fn = lg.label

    return [RepresentationRow(label=label_fn(v), coords=tuple(reps[v])) for v in order]


def table_to_tsv(rows: List[RepresentationRow]) -> str:
    if not rows:
        return "label\n"
    k = len(rows[0].coords)
    lines = ["\t".join(["label"] + [f"Q{b}" for b in range(1, k + 1)])]
    lines.extend("\t".join([row.label] + [str(c) for c in row.coords]) for row in rows)
    return "\n".join(lines) + "\n"


def table_to_json(rows: List[RepresentationRow], indent: Optional[int] = 2) -> str:
    return dumps_json([row.to_dict() for row in rows], indent=indent)
