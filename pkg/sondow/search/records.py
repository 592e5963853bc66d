"""
Search result records and their JSON Lines form

All integers are written as decimal strings so values beyond 2^53 survive
any JSON reader.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..arith import Factorization
from ..predicates import CharacterizationFlags


@dataclass(frozen=True)
class SearchRecord:
    n: int
    mu: int
    factorization: Factorization
    flags: CharacterizationFlags
    composite: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": str(self.n),
            "mu": str(self.mu),
            "factors": self.factorization.to_pairs(),
            "flags": self.flags.to_dict(),
            "composite": self.composite,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchRecord":
        factorization = Factorization.from_pairs(data["factors"])
        n = int(data["n"])
        if factorization.value != n:
            raise ValueError(f"record factors multiply to {factorization.value}, not {n}")
        return cls(
            n=n,
            mu=int(data["mu"]),
            factorization=factorization,
            flags=CharacterizationFlags.from_dict(data["flags"]),
            composite=bool(data["composite"]),
        )

    @classmethod
    def from_json(cls, line: str) -> "SearchRecord":
        return cls.from_dict(json.loads(line))


@dataclass(frozen=True)
class ConjectureReport:
    mu: int
    interval: Tuple[int, int]  # (lo, hi]
    witness: Optional[int]
    exhausted: bool
    wall_time: float  # seconds

    def __post_init__(self):
        if (self.witness is None) != self.exhausted:
            raise ValueError("a conjecture report has either a witness or an exhausted interval")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": str(self.mu),
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "witness": None if self.witness is None else str(self.witness),
            "exhausted": self.exhausted,
            "wall_time": round(self.wall_time, 3),
        }


@dataclass
class Checkpoint:
    mu: int
    next_segment_lo: int
    records: List[SearchRecord] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": str(self.mu),
            "next_segment_lo": str(self.next_segment_lo),
            "records": [r.to_dict() for r in self.records],
        }
