"""
Segmented range search for μ-Sondow numbers

Each segment is sieved once; the scan predicate is the single congruence
Σ_{p|n} n/p + μ ≡ 0 (mod n), evaluated for the whole segment with numpy.
Hits are re-verified prime power by prime power and classified before they
are emitted. Segments are handed to workers in order and their results are
consumed in the same order, so the output does not depend on worker count.
"""

import logging
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Union

import numpy as np

from ..arith import segment_bounds, spf_sieve
from ..config import DEFAULT_CONFIG, SIEVE_WORD_LIMIT, OracleBounds, SondowConfig
from ..errors import SearchRangeError, SieveConsistencyError
from ..predicates import classify, is_mu_sondow
from .checkpoint import checkpoint_resume, checkpoint_save
from .records import Checkpoint, SearchRecord

logger = logging.getLogger("sondow.search")


@dataclass(frozen=True)
class SegmentTask:
    lo: int
    hi: int
    mu: int
    composite_only: bool
    oracle_bounds: OracleBounds
    max_segment_size: int


def validate_range(mu: int, lo: int, hi: int) -> None:
    if lo < 2 or hi < lo:
        raise SearchRangeError(f"search range needs 2 <= lo <= hi, got [{lo}, {hi}]")
    if hi >= SIEVE_WORD_LIMIT:
        raise SearchRangeError(f"search bound {hi} exceeds the sieve word limit 2^60")
    if abs(mu) >= SIEVE_WORD_LIMIT:
        raise SearchRangeError(f"|mu| = {abs(mu)} exceeds the sieve word limit 2^60")


def segment_hits(lo: int, hi: int, mu: int, composite_only: bool = False, max_segment_size: Optional[int] = None):
    """The sieved segment and the offsets of n with Σ n/p + μ ≡ 0 (mod n)"""
    segment = spf_sieve(lo, hi, max_segment_size)
    values = segment.values()
    mask = np.mod(segment.prime_part_sum + np.int64(mu), values) == 0
    if composite_only:
        mask &= segment.spf != values
    return segment, np.flatnonzero(mask)


def scan_segment(task: SegmentTask) -> List[SearchRecord]:
    segment, offsets = segment_hits(task.lo, task.hi, task.mu, task.composite_only, task.max_segment_size)
    records = []
    for offset in offsets.tolist():
        n = task.lo + offset
        f = segment.factorize(n)
        verdict = is_mu_sondow(f, task.mu)
        if not verdict.member:
            raise SieveConsistencyError(n, task.mu, f"failing prime powers {verdict.failing()}")
        records.append(SearchRecord(
            n=n,
            mu=task.mu,
            factorization=f,
            flags=classify(f, task.mu, task.oracle_bounds),
            composite=f.is_composite(),
        ))
        logger.debug(f"Hit n={n} ({f}) for mu={task.mu}")
    return records


def _run_segments(tasks: Iterable[SegmentTask], jobs: int) -> Iterator[List[SearchRecord]]:
    if jobs <= 1:
        for task in tasks:
            yield scan_segment(task)
        return

    tasks = iter(tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = deque(pool.submit(scan_segment, task) for task in islice(tasks, 2 * jobs))
        try:
            while pending:
                result = pending.popleft().result()
                for task in islice(tasks, 1):
                    pending.append(pool.submit(scan_segment, task))
                yield result
        finally:
            for future in pending:
                future.cancel()


def search_range(
    mu: int,
    lo: int,
    hi: int,
    composite_only: bool = False,
    jobs: int = 1,
    checkpoint: Optional[Union[str, Path]] = None,
    config: SondowConfig = DEFAULT_CONFIG,
) -> Iterator[SearchRecord]:
    """All n in [lo, hi] with n ∈ S_μ, in increasing order.

    The range is checked before anything is returned. With `checkpoint`,
    progress is saved at segment boundaries (at most once per
    `config.checkpoint_interval` seconds, and always after the last segment)
    and an existing checkpoint file is resumed: its records are emitted
    first, so the resumed stream equals an uninterrupted one.
    """
    validate_range(mu, lo, hi)
    return _search(mu, lo, hi, composite_only, jobs, checkpoint, config)


def _search(
    mu: int,
    lo: int,
    hi: int,
    composite_only: bool,
    jobs: int,
    checkpoint: Optional[Union[str, Path]],
    config: SondowConfig,
) -> Iterator[SearchRecord]:
    start = lo
    saved: List[SearchRecord] = []
    if checkpoint is not None and Path(checkpoint).exists():
        state = checkpoint_resume(checkpoint, mu, lo, hi, composite_only)
        saved = list(state.records)
        start = state.next_segment_lo
        yield from saved

    bounds = segment_bounds(start, hi, config.segment_size)
    logger.info(f"Searching mu={mu} over [{start}, {hi}] in {len(bounds)} segment(s) with {jobs} job(s)")
    tasks = (
        SegmentTask(seg_lo, seg_hi, mu, composite_only, config.search_oracle_bounds, config.max_segment_size)
        for seg_lo, seg_hi in bounds
    )

    found = len(saved)
    last_save = None
    for i, ((seg_lo, seg_hi), records) in enumerate(zip(bounds, _run_segments(tasks, jobs))):
        if checkpoint is not None:
            saved.extend(records)
            now = time.monotonic()
            due = last_save is None or now - last_save >= config.checkpoint_interval
            if due or i == len(bounds) - 1:
                checkpoint_save(Checkpoint(mu=mu, next_segment_lo=seg_hi + 1, records=saved), checkpoint)
                last_save = now
        found += len(records)
        logger.info(f"Segment [{seg_lo}, {seg_hi}] done: {len(records)} hit(s), {found} total")
        yield from records


def write_jsonl(records: Iterable[SearchRecord], path: Union[str, Path]) -> int:
    """Write records as JSON Lines; returns the count"""
    count = 0
    with open(path, "w") as f:
        for record in records:
            f.write(record.to_json() + "\n")
            count += 1
    return count
