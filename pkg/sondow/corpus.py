"""
OEIS b-file ingestion, factor hints and corpus cross-checks
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .arith import Factorization, factorize, is_prime
from .config import FactorBudget
from .errors import (
    BFileFormatError,
    BFileParseError,
    BudgetError,
    FactorHintError,
    SondowError,
)
from .predicates import is_giuga, is_mu_sondow, is_primary_ppp, is_weak_ppp

logger = logging.getLogger("sondow.corpus")

PREDICATE_NAMES = ("giuga", "weak_ppp", "primary_ppp", "sondow")


@dataclass(frozen=True)
class BFileEntry:
    index: int
    value: int


def parse_bfile(text: str) -> List[BFileEntry]:
    """Parse "index value" lines; '#' comments and blank lines are skipped"""
    entries: List[BFileEntry] = []
    for line_number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(line_number, raw)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(line_number, raw, "non-integer field")
        if entries and index <= entries[-1].index:
            raise BFileFormatError(
                f"b-file line {line_number}: index {index} does not increase (previous {entries[-1].index})"
            )
        entries.append(BFileEntry(index, value))
    return entries


def load_bfile(path: Union[str, Path]) -> List[BFileEntry]:
    return parse_bfile(Path(path).read_text())


# ==================== Factor hints ====================

@dataclass(frozen=True)
class FactorListInput:
    """A claimed factorization, validated on construction"""
    claimed_value: int
    claimed_factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for p, e in self.claimed_factors:
            if e < 1:
                raise FactorHintError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise FactorHintError(f"claimed factor {p} of {self.claimed_value} is not prime")
        # from_factors checks the product
        Factorization.from_factors(self.claimed_factors, value=self.claimed_value)

    @property
    def factorization(self) -> Factorization:
        return Factorization.from_factors(self.claimed_factors, value=self.claimed_value)

    @classmethod
    def from_dict(cls, data: Dict) -> "FactorListInput":
        try:
            value = int(data["n"])
            factors = tuple((int(p), int(e)) for p, e in data["factors"])
        except (KeyError, TypeError, ValueError) as e:
            raise FactorHintError(f"malformed factor hint {data!r}: {e}")
        return cls(value, factors)


def parse_factor_spec(spec: str) -> List[Tuple[int, int]]:
    """"2,3^2,5" -> [(2, 1), (3, 2), (5, 1)]"""
    factors = []
    for item in spec.replace(" ", "").split(","):
        if not item:
            continue
        base, _, exponent = item.partition("^")
        try:
            factors.append((int(base), int(exponent) if exponent else 1))
        except ValueError:
            raise FactorHintError(f"bad factor {item!r}, expected p or p^e")
    if not factors:
        raise FactorHintError("empty factor list")
    return factors


def load_factor_hints(path: Union[str, Path]) -> Dict[int, FactorListInput]:
    """Read hints as a JSON list or JSON Lines of {"n": "...", "factors": [["p", "e"], ...]}"""
    text = Path(path).read_text().strip()
    if not text:
        return {}
    try:
        if text.startswith("["):
            items = json.loads(text)
        else:
            items = [json.loads(line) for line in text.splitlines() if line.strip()]
    except json.JSONDecodeError as e:
        raise FactorHintError(f"cannot parse factor hints {path}: {e}")
    hints = [FactorListInput.from_dict(item) for item in items]
    return {h.claimed_value: h for h in hints}


# ==================== Cross-check ====================

def predicate_for(name: str, mu: Optional[int] = None) -> Callable[[Factorization], bool]:
    if name == "giuga":
        return is_giuga
    if name == "weak_ppp":
        return is_weak_ppp
    if name == "primary_ppp":
        return is_primary_ppp
    if name == "sondow":
        if mu is None:
            raise SondowError("the sondow predicate needs a mu")
        return lambda f: is_mu_sondow(f, mu).member
    raise SondowError(f"unknown predicate {name!r}, expected one of {PREDICATE_NAMES}")


@dataclass
class CrosscheckReport:
    predicate: str
    passed: List[int] = field(default_factory=list)
    failed: List[int] = field(default_factory=list)
    skipped: List[int] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.passed) + len(self.failed) + len(self.skipped)

    @property
    def ok(self) -> bool:
        return not self.failed and not self.skipped

    def summary(self) -> str:
        return f"{self.predicate}: {len(self.passed)}/{self.total} pass, {len(self.failed)} fail, {len(self.skipped)} skipped"


def crosscheck(
    entries: Iterable[BFileEntry],
    predicate: str,
    factor_hints: Optional[Union[Dict[int, FactorListInput], Sequence[FactorListInput]]] = None,
    mu: Optional[int] = None,
    budget: Optional[FactorBudget] = None,
) -> CrosscheckReport:
    """Run a predicate over corpus entries; unfactorable entries are skipped"""
    test = predicate_for(predicate, mu)
    if factor_hints is None:
        hints: Dict[int, FactorListInput] = {}
    elif isinstance(factor_hints, dict):
        hints = factor_hints
    else:
        hints = {h.claimed_value: h for h in factor_hints}

    label = predicate if predicate != "sondow" else f"sondow({mu})"
    report = CrosscheckReport(predicate=label)
    for entry in entries:
        n = entry.value
        if n in hints:
            f = hints[n].factorization
        else:
            try:
                f = factorize(n, budget) if budget else factorize(n)
            except BudgetError:
                logger.warning(f"Skipping {n}: cannot factor within budget and no hint given")
                report.skipped.append(n)
                continue
        try:
            result = test(f)
        except SondowError as e:
            logger.warning(f"Predicate {label} not applicable to {n}: {e}")
            result = False
        (report.passed if result else report.failed).append(n)
    logger.info(report.summary())
    return report
