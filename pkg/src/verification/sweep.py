"""
定理扫描：对环长与环数的笛卡尔积逐一运行实例报告
"""

from itertools import product
from typing import List, Optional, Sequence, Tuple

from src.chains import Parity, build_chain_cycle
from src.shared.exceptions import ValidationError
from src.shared.settings import ChainDimSettings
from src.shared.utils.logger import get_logger
from src.shared.utils.pool_utils import ordered_map
from .invariants import instance_report
from .schema import InvariantReport, VerificationRun

logger = get_logger(__name__)


def validate_ranges(parity: Parity, ns: Sequence[int], ms: Sequence[int]) -> None:
    """
    Raises:
        ValidationError: 空范围、m < 2、环长不属于本族，或奇环长 < 5
    """
    if not ns or not ms:
        raise ValidationError("both --ns and --ms must be non-empty", field="ranges")
    bad_m = [m for m in ms if m < 2]
    if bad_m:
        raise ValidationError(f"every m must be at least 2, got {bad_m}", field="ms", value=bad_m)
    bad_n = [n for n in ns if not parity.accepts(n)]
    if bad_n:
        raise ValidationError(f"{parity.value} sweeps take {parity.value} n_i >= {parity.min_length}, got {bad_n}",
                              field="ns", value=bad_n)
    if parity is Parity.ODD:
        small = [n for n in ns if n < 5]
        if small:
            raise ValidationError(f"odd sweeps need n_i >= 5 (formula hypothesis), got {small}",
                                  field="ns", value=small)


def sweep_instances(ns: Sequence[int], ms: Sequence[int]) -> List[Tuple[int, ...]]:
    """m 升序；同一 m 内环长元组按字典序"""
    lengths = sorted(set(ns))
    return [tuple(t) for m in sorted(set(ms)) for t in product(lengths, repeat=m)]


def _sweep_worker(job: Tuple[str, Tuple[int, ...], ChainDimSettings]) -> InvariantReport:
    parity_value, lengths, settings = job
    return instance_report(build_chain_cycle(Parity(parity_value), lengths), settings)


def run_sweep(
    parity: Parity,
    ns: Sequence[int],
    ms: Sequence[int],
    settings: Optional[ChainDimSettings] = None,
    seed: Optional[int] = None
) -> VerificationRun:
    settings = settings or ChainDimSettings()
    validate_ranges(parity, ns, ms)
    instances = sweep_instances(ns, ms)
    logger.info("sweep started", family=parity.value, instances=len(instances),
                workers=settings.verification.workers)

    jobs = [(parity.value, lengths, settings) for lengths in instances]
    reports = ordered_map(_sweep_worker, jobs, workers=settings.verification.workers)

    run = VerificationRun(
        family=parity.value,
        ns=sorted(set(ns)),
        ms=sorted(set(ms)),
        seed=settings.verification.seed if seed is None else seed,
        instances=reports,
    )
    logger.info("sweep finished", family=parity.value, **run.summary)
    return run
