from __future__ import annotations

import statistics
from collections.abc import Sequence

from hotlog import get_logger

from astkit.evalkit.models import ProblemMeta, Tier
from astkit.exceptions import InvalidBoundaries

logger = get_logger(__name__)


def tercile_boundaries(chars: Sequence[int]) -> tuple[float, float]:
    """1/3 and 2/3 quantiles with linear interpolation between sorted points."""
    if len(chars) == 1:
        return float(chars[0]), float(chars[0])
    low, high = statistics.quantiles(chars, n=3, method='inclusive')
    return low, high


def classify_tiers(
    metas: Sequence[ProblemMeta],
    boundaries: tuple[float, float] | None = None,
) -> list[ProblemMeta]:
    """Assign T1/T2/T3 by reference length; a length equal to a boundary takes the lower tier.

    Raises:
        InvalidBoundaries: explicit boundaries are not strictly increasing.
    """
    if boundaries is not None and boundaries[0] >= boundaries[1]:
        msg = f'tier boundaries must increase, got {boundaries[0]} >= {boundaries[1]}'
        raise InvalidBoundaries(msg)
    if not metas:
        return []
    low, high = boundaries or tercile_boundaries([m.reference_verilog_chars for m in metas])
    logger.debug('tier_boundaries', low=low, high=high, problems=len(metas))

    def tier_of(chars: int) -> Tier:
        if chars <= low:
            return Tier.T1
        if chars <= high:
            return Tier.T2
        return Tier.T3

    return [m.model_copy(update={'tier': tier_of(m.reference_verilog_chars)}) for m in metas]
