"""
Checkpoint save/resume for range searches

A checkpoint is one JSON document {mu, next_segment_lo, records}. It is
written to a temporary file and moved into place, so a crash mid-write
leaves the previous checkpoint intact.
"""

import json
import logging
import os
from pathlib import Path
from typing import List, Union

from ..arith import factorize, is_prime
from ..errors import CheckpointError
from .records import Checkpoint, SearchRecord

logger = logging.getLogger("sondow.checkpoint")

PathLike = Union[str, Path]


def checkpoint_save(state: Checkpoint, path: PathLike) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w") as f:
        json.dump(state.to_dict(), f)
    os.replace(tmp, path)
    logger.info(f"Checkpoint saved at n={state.next_segment_lo} ({len(state.records)} records)")


def checkpoint_load(path: PathLike) -> Checkpoint:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise CheckpointError(f"cannot read checkpoint {path}: {e}")
    if not text.strip():
        raise CheckpointError(f"checkpoint {path} is empty")
    try:
        data = json.loads(text)
        if set(data) != {"mu", "next_segment_lo", "records"}:
            raise CheckpointError(f"checkpoint {path} has fields {sorted(data)}")
        return Checkpoint(
            mu=int(data["mu"]),
            next_segment_lo=int(data["next_segment_lo"]),
            records=[SearchRecord.from_dict(r) for r in data["records"]],
        )
    except CheckpointError:
        raise
    except (ValueError, KeyError, TypeError, AttributeError) as e:
        raise CheckpointError(f"checkpoint {path} is corrupt: {e}")


def _prime_members(mu: int, lo: int, stop: int) -> List[int]:
    """Primes in [lo, stop) that belong to S_μ; a prime p is a member exactly when p | μ + 1.

    Every prime is a member for μ = −1, so only the first one is listed.
    """
    if mu == -1:
        for n in range(lo, stop):
            if is_prime(n):
                return [n]
        return []
    return [p for p in factorize(abs(mu + 1)).primes if lo <= p < stop]


def checkpoint_resume(path: PathLike, mu: int, lo: int, hi: int, composite_only: bool = False) -> Checkpoint:
    """Load a checkpoint and check it belongs to the search (mu, [lo, hi], composite_only)"""
    state = checkpoint_load(path)
    if state.mu != mu:
        raise CheckpointError(f"checkpoint is for mu={state.mu}, search is for mu={mu}")
    if not lo <= state.next_segment_lo <= hi + 1:
        raise CheckpointError(
            f"checkpoint resumes at {state.next_segment_lo}, outside the search range [{lo}, {hi}]"
        )
    previous = lo - 1
    for record in state.records:
        if record.mu != mu:
            raise CheckpointError(f"checkpoint record {record.n} has mu={record.mu}")
        if not previous < record.n < state.next_segment_lo:
            raise CheckpointError(f"checkpoint record {record.n} is out of order or past the resume point")
        previous = record.n

    saved = {record.n for record in state.records}
    if composite_only:
        primes = [record.n for record in state.records if not record.composite]
        if primes:
            raise CheckpointError(f"checkpoint holds prime members {primes[:5]} but the search is composite-only")
    else:
        missing = [p for p in _prime_members(mu, lo, state.next_segment_lo) if p not in saved]
        if missing:
            raise CheckpointError(
                f"checkpoint lacks prime members {missing[:5]}; it was written by a composite-only search"
            )
    logger.info(f"Resuming mu={mu} search at n={state.next_segment_lo} with {len(state.records)} saved records")
    return state
