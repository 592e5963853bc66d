"""
Bounded checks of the open questions about μ-Sondow numbers, and the
residue tables of known Giuga and primary pseudoperfect numbers
"""

import logging
import time
from itertools import groupby
from typing import Iterable, List, Optional, Tuple

from ..arith import segment_bounds
from ..config import DEFAULT_CONFIG, SondowConfig
from ..errors import SearchRangeError, SieveConsistencyError, SondowError
from ..predicates import is_mu_sondow
from .engine import segment_hits, validate_range
from .records import ConjectureReport

logger = logging.getLogger("sondow.conjectures")

# μ for which S_μ ∩ [2, |μ|] is empty; 0 and ±1 are excluded by precondition.
CONJECTURE1_EXCEPTIONS = frozenset({0, 1, -1, 2, -2, 4, 16})


def first_member(mu: int, lo: int, hi: int, config: SondowConfig = DEFAULT_CONFIG) -> Optional[int]:
    """Smallest n in [lo, hi] (lo ≥ 2) with n ∈ S_μ, or None"""
    validate_range(mu, lo, hi)
    for seg_lo, seg_hi in segment_bounds(lo, hi, config.segment_size):
        segment, offsets = segment_hits(seg_lo, seg_hi, mu, max_segment_size=config.max_segment_size)
        if len(offsets):
            n = seg_lo + int(offsets[0])
            if not is_mu_sondow(segment.factorize(n), mu).member:
                raise SieveConsistencyError(n, mu)
            return n
    return None


def conjecture1_check(mu: int, config: SondowConfig = DEFAULT_CONFIG) -> ConjectureReport:
    """Look for a member of S_μ in [2, |μ|]"""
    if abs(mu) < 2:
        raise SearchRangeError(f"[2, |mu|] is empty for mu={mu}")
    started = time.perf_counter()
    witness = first_member(mu, 2, abs(mu), config)
    report = ConjectureReport(
        mu=mu,
        interval=(1, abs(mu)),
        witness=witness,
        exhausted=witness is None,
        wall_time=time.perf_counter() - started,
    )
    if witness is None and mu not in CONJECTURE1_EXCEPTIONS:
        logger.warning(f"mu={mu}: no member in [2, {abs(mu)}] outside the known exception set")
    return report


def conjecture2_search(mu: int, bound: int, config: SondowConfig = DEFAULT_CONFIG) -> ConjectureReport:
    """Look for a member of S_μ in (|μ|, bound].

    An exhausted report only says nothing was found up to `bound`.
    """
    if bound <= abs(mu):
        raise SearchRangeError(f"bound {bound} must exceed |mu| = {abs(mu)}")
    started = time.perf_counter()
    lo = abs(mu) + 1
    if lo == 1:
        # 1 ∈ S_μ for every μ.
        witness: Optional[int] = 1
    else:
        witness = first_member(mu, lo, bound, config)
    report = ConjectureReport(
        mu=mu,
        interval=(abs(mu), bound),
        witness=witness,
        exhausted=witness is None,
        wall_time=time.perf_counter() - started,
    )
    if witness is None:
        logger.warning(f"mu={mu}: no member in ({abs(mu)}, {bound}] (searched in {report.wall_time:.1f}s)")
    else:
        logger.info(f"mu={mu}: witness {witness} in ({abs(mu)}, {bound}]")
    return report


def conjecture1_table(mu_values: Iterable[int], config: SondowConfig = DEFAULT_CONFIG) -> List[ConjectureReport]:
    return [conjecture1_check(mu, config) for mu in mu_values if abs(mu) >= 2]


def residue_table(values: Iterable[int], modulus: int = 288) -> List[int]:
    if modulus < 1:
        raise SondowError(f"modulus must be >= 1, got {modulus}")
    return [v % modulus for v in values]


def residue_runs(residues: Iterable[int]) -> List[Tuple[int, int]]:
    """(residue, run length) for each run of equal consecutive residues"""
    return [(r, len(list(run))) for r, run in groupby(residues)]
