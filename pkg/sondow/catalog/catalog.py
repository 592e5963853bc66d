"""
Sondow catalog
High-level operations over the vendored corpus (known Giuga and primary
pseudoperfect numbers with their factorizations, OEIS b-files). Shared by
the CLI and the MCP tool server; every method returns plain dictionaries.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

from ..arith import Factorization, arithmetic_derivative, factorize
from ..config import SondowConfig
from ..constructions import extend_by_successor, lift, lift_converse_check, lift_family, reduce_by_gcd
from ..corpus import FactorListInput, crosscheck, load_bfile, load_factor_hints, parse_factor_spec
from ..errors import SondowError
from ..predicates import (
    classify,
    complementary_mu,
    egyptian_sum,
    is_giuga,
    is_mu_sondow,
    is_primary_ppp,
    is_weak_ppp,
)
from ..search import conjecture1_check, conjecture2_search, residue_runs, residue_table, search_range

logger = logging.getLogger("sondow.catalog")

FAMILIES = {
    "giuga": ("giuga_numbers.json", "giuga_numbers"),
    "primary_ppp": ("primary_pseudoperfect.json", "primary_pseudoperfect_numbers"),
}

BFILES = {
    "A007850": "b007850.txt",
    "A054377": "b054377.txt",
}


class SondowCatalog:
    """Corpus-backed front end to the library"""

    def __init__(self, config: Optional[SondowConfig] = None):
        self.config = config or SondowConfig.from_env()
        self.data_dir = Path(self.config.data_dir)
        self._load_data()

    def _load_data(self):
        """Load the known-number tables from JSON"""
        self.families: Dict[str, List[Dict[str, Any]]] = {}
        self.hints: Dict[int, FactorListInput] = {}
        for family, (filename, key) in FAMILIES.items():
            with open(self.data_dir / filename, "r") as f:
                data = json.load(f)
            rows = data[key]
            self.families[family] = rows
            for row in rows:
                hint = FactorListInput.from_dict(row)
                self.hints[hint.claimed_value] = hint
        logger.info(f"Loaded {len(self.hints)} known factorizations from {self.data_dir}")

    # ==================== Inputs ====================

    def known_values(self, family: str) -> List[int]:
        if family not in self.families:
            raise SondowError(f"unknown family {family!r}, expected one of {sorted(self.families)}")
        return [int(row["n"]) for row in self.families[family]]

    def known_numbers(self, family: str) -> Dict[str, Any]:
        values = self.known_values(family)
        return {
            "family": family,
            "count": len(values),
            "numbers": [
                {"n": str(v), "factorization": str(self.hints[v].factorization)}
                for v in values
            ],
        }

    def add_hints(self, path: Union[str, Path]) -> int:
        loaded = load_factor_hints(path)
        self.hints.update(loaded)
        return len(loaded)

    def resolve(self, n: int, factors: Optional[str] = None) -> Factorization:
        """Factorization of n from an explicit "p^e,..." list, a known hint, or factoring within budget"""
        if n < 1:
            raise SondowError(f"n must be a positive integer, got {n}")
        if factors:
            return FactorListInput(n, tuple(parse_factor_spec(factors))).factorization
        if n in self.hints:
            return self.hints[n].factorization
        return factorize(n, self.config.budget)

    # ==================== Membership ====================

    def check(self, n: int, mu: int, factors: Optional[str] = None) -> Dict[str, Any]:
        f = self.resolve(n, factors)
        verdict = is_mu_sondow(f, mu)
        flags = classify(f, mu, self.config.oracle_bounds)
        mu_star, mu_negative = complementary_mu(f)
        return {
            "n": str(n),
            "mu": str(mu),
            "factorization": str(f),
            "factors": f.to_pairs(),
            "member": verdict.member,
            "witnesses": [
                {"prime": str(w.prime), "exponent": w.exponent, "residue": str(w.residue)}
                for w in verdict.witnesses
            ],
            "flags": flags.to_dict(),
            "flags_agree": flags.agree,
            "canonical_mu": str(mu_star),
            "negative_mu": str(mu_negative),
            "egyptian_sum": str(egyptian_sum(f, mu)),
            "giuga": is_giuga(f),
            "weak_ppp": is_weak_ppp(f),
            "primary_ppp": is_primary_ppp(f) if n > 1 else None,
        }

    def mu_of(self, n: int, factors: Optional[str] = None) -> Dict[str, Any]:
        f = self.resolve(n, factors)
        mu_star, mu_negative = complementary_mu(f)
        return {"n": str(n), "factorization": str(f), "canonical_mu": str(mu_star), "negative_mu": str(mu_negative)}

    def derive(self, n: int, factors: Optional[str] = None) -> Dict[str, Any]:
        f = self.resolve(n, factors)
        return {"n": str(n), "factorization": str(f), "derivative": str(arithmetic_derivative(f))}

    # ==================== Constructions ====================

    def lift(self, n: int, mu: int, factors: Optional[str] = None) -> Dict[str, Any]:
        result = lift(self.resolve(n, factors), mu)
        return {
            "input_n": str(result.input_n),
            "input_mu": str(result.input_mu),
            "output_n": str(result.output_n),
            "output_mu": str(result.output_mu),
            "factorization": str(result.output_factorization),
            "verified": result.verified,
        }

    def lift_converse(self, value: int, mu: int, factors: Optional[str] = None) -> Dict[str, Any]:
        report = lift_converse_check(self.resolve(value, factors), mu)
        return {
            "value": str(value),
            "mu": str(mu),
            "n": str(report.n),
            "radical_divides": report.radical_divides,
            "base_member": report.base_member,
            "member": report.radical_divides and report.base_member,
        }

    def lift_known(self, mu: int) -> Dict[str, Any]:
        """Lift the known weak primary pseudoperfect (μ > 0) or Giuga (μ < 0) numbers"""
        family = "primary_ppp" if mu > 0 else "giuga"
        bases = [self.hints[v].factorization for v in self.known_values(family)]
        results = lift_family(bases, mu)
        return {
            "mu": str(mu),
            "family": family,
            "lifted": [{"n": str(r.input_n), "output_n": str(r.output_n), "verified": r.verified} for r in results],
        }

    def extend(self, n: int, factors: Optional[str] = None) -> Dict[str, Any]:
        extended = extend_by_successor(self.resolve(n, factors))
        return {"n": str(n), "output_n": str(extended.value), "factorization": str(extended)}

    def reduce(self, n: int, mu: int, factors: Optional[str] = None) -> Dict[str, Any]:
        reduced, reduced_mu = reduce_by_gcd(self.resolve(n, factors), mu)
        return {
            "n": str(n),
            "mu": str(mu),
            "delta": str(n // reduced.value),
            "reduced_n": str(reduced.value),
            "reduced_mu": str(reduced_mu),
            "factorization": str(reduced),
        }

    # ==================== Search ====================

    def search(
        self,
        mu: int,
        lo: int,
        hi: int,
        composite_only: bool = False,
        jobs: int = 1,
        checkpoint: Optional[str] = None,
        limit: Optional[int] = None,
    ) -> Dict[str, Any]:
        if limit is not None and hi - lo + 1 > limit:
            raise SondowError(f"range of {hi - lo + 1} integers exceeds the limit {limit}")
        records = list(search_range(mu, lo, hi, composite_only, jobs, checkpoint, self.config))
        return {
            "mu": str(mu),
            "range": [str(lo), str(hi)],
            "composite_only": composite_only,
            "count": len(records),
            "records": [r.to_dict() for r in records],
        }

    def conjecture1(self, mu_values: Iterable[int]) -> Dict[str, Any]:
        reports = [conjecture1_check(mu, self.config) for mu in mu_values if abs(mu) >= 2]
        exhausted = [r.mu for r in reports if r.exhausted]
        return {
            "checked": len(reports),
            "exhausted": [str(mu) for mu in exhausted],
            "reports": [r.to_dict() for r in reports],
        }

    def conjecture2(self, mu: int, bound: int) -> Dict[str, Any]:
        return conjecture2_search(mu, bound, self.config).to_dict()

    def residues(self, values: Iterable[int], modulus: int = 288) -> Dict[str, Any]:
        values = list(values)
        table = residue_table(values, modulus)
        return {
            "modulus": str(modulus),
            "values": [str(v) for v in values],
            "residues": [str(r) for r in table],
            "runs": [[str(r), length] for r, length in residue_runs(table)],
        }

    # ==================== Corpus ====================

    def bfile_path(self, name: str) -> Path:
        """A vendored b-file by sequence id (A007850) or a filesystem path"""
        if name in BFILES:
            return self.data_dir / BFILES[name]
        return Path(name)

    def crosscheck(self, bfile: str, predicate: str, mu: Optional[int] = None) -> Dict[str, Any]:
        entries = load_bfile(self.bfile_path(bfile))
        report = crosscheck(entries, predicate, self.hints, mu=mu, budget=self.config.budget)
        return {
            "predicate": report.predicate,
            "total": report.total,
            "passed": len(report.passed),
            "failed": [str(n) for n in report.failed],
            "skipped": [str(n) for n in report.skipped],
            "summary": report.summary(),
            "ok": report.ok,
        }
