"""
分辨划分模块
划分表示、分辨性检查、小规模精确求解、链环构造划分与公式核对
"""

from .enum import ClaimStatus, LowerBoundReason
from .schema import (
    ClaimMismatch,
    ClaimedValue,
    DiscrepancyReport,
    Partition,
    PdCertificate,
    Representation,
    VertexClaims,
)
from .representation import (
    ResolveCheck,
    block_minima,
    first_collision,
    is_resolving_partition,
    is_resolving_set,
    partition_representation,
    representation_matrix,
)
from .constructed_partitions import constructed_partition, constructed_partition_even, constructed_partition_odd
from .claimed import claimed_representations, claimed_values
from .exact import (
    metric_dimension_exact,
    minimum_resolving_set,
    partition_dimension_exact,
    restricted_growth_strings,
)
from .chain_pd import partition_dimension_chain
from .partition_text import format_partition, parse_partition
from .tables import RepresentationRow, representation_table, table_to_json, table_to_tsv

__all__ = [
    'ClaimStatus',
    'LowerBoundReason',
    'ClaimedValue',
    'ClaimMismatch',
    'DiscrepancyReport',
    'Partition',
    'PdCertificate',
    'Representation',
    'VertexClaims',
    'ResolveCheck',
    'block_minima',
    'first_collision',
    'is_resolving_partition',
    'is_resolving_set',
    'partition_representation',
    'representation_matrix',
    'constructed_partition',
    'constructed_partition_even',
    'constructed_partition_odd',
    'claimed_representations',
    'claimed_values',
    'metric_dimension_exact',
    'minimum_resolving_set',
    'partition_dimension_exact',
    'restricted_growth_strings',
    'partition_dimension_chain',
    'format_partition',
    'parse_partition',
    'RepresentationRow',
    'representation_table',
    'table_to_json',
    'table_to_tsv',
]
