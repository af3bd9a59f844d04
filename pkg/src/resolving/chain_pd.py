"""
链环的划分维数：下界来自"非路图则 pd >= 3"，上界来自构造的三块划分
"""

from typing import Optional

from src.chains import ChainCycle
from src.graph import DistanceMatrix, distance_matrix
from src.shared.exceptions import WitnessNotResolvingError
from src.shared.utils.logger import get_logger
from .enum import LowerBoundReason
from .constructed_partitions import constructed_partition
from .representation import is_resolving_partition
from .schema import PdCertificate

logger = get_logger(__name__)


def partition_dimension_chain(cc: ChainCycle, dm: Optional[DistanceMatrix] = None) -> PdCertificate:
    """
    pd = 3，不做枚举

    Raises:
        WitnessNotResolvingError: 构造划分中有两个顶点表示相同
    """
    dm = dm if dm is not None else distance_matrix(cc.graph)
    witness = constructed_partition(cc)
    check = is_resolving_partition(dm, witness)
    if not check:
        u, v = check.pair
        pair = (cc.position_label(u), cc.position_label(v))
        raise WitnessNotResolvingError(
            f"constructed partition of {cc.spec} does not resolve {pair[0]} and {pair[1]}",
            pair=pair,
            instance=cc.spec,
        )

    # 链环含环，不是路，故 pd >= 3
    logger.info("witness verified", instance=cc.spec, k=witness.k)
    return PdCertificate(value=witness.k, lower_bound_reason=LowerBoundReason.NOT_A_PATH, witness=witness)
