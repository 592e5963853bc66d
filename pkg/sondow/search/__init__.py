"""
Range search, conjecture checks and checkpoints
"""

from .checkpoint import checkpoint_load, checkpoint_resume, checkpoint_save
from .conjectures import (
    CONJECTURE1_EXCEPTIONS,
    conjecture1_check,
    conjecture1_table,
    conjecture2_search,
    first_member,
    residue_runs,
    residue_table,
)
from .engine import scan_segment, search_range, segment_hits, write_jsonl
from .records import Checkpoint, ConjectureReport, SearchRecord

__all__ = [
    "CONJECTURE1_EXCEPTIONS",
    "Checkpoint",
    "ConjectureReport",
    "SearchRecord",
    "checkpoint_load",
    "checkpoint_resume",
    "checkpoint_save",
    "conjecture1_check",
    "conjecture1_table",
    "conjecture2_search",
    "first_member",
    "residue_runs",
    "residue_table",
    "scan_segment",
    "search_range",
    "segment_hits",
    "write_jsonl",
]
