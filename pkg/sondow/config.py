"""
Sondow configuration

Defaults live here as frozen dataclasses. `SondowConfig.from_env()` applies
overrides from SONDOW_* environment variables (mcp-config.json passes them
through its "env" block).
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Optional

DEFAULT_DATA_DIR = Path(__file__).parent.parent / "corpus_data"

DEFAULT_SEGMENT_SIZE = 1 << 22
MAX_SEGMENT_SIZE = 1 << 26
DEFAULT_TRIAL_LIMIT = 10 ** 6
DEFAULT_POWER_SUM_MAX_N = 10 ** 6
DEFAULT_BERNOULLI_MAX_K = 500
DESK_BOUND = 10 ** 8
DEFAULT_CHECKPOINT_INTERVAL = 30.0

# Sieve arithmetic runs in int64; Σ n/p stays below 3n for n under this.
SIEVE_WORD_LIMIT = 1 << 60


@dataclass(frozen=True)
class FactorBudget:
    """Effort limits for blind factoring"""
    trial_limit: int = DEFAULT_TRIAL_LIMIT
    rho_iterations: int = 2_000_000
    rho_restarts: int = 8
    seed: int = 0x5D0


@dataclass(frozen=True)
class OracleBounds:
    """Upper limits for the expensive characterizations"""
    power_sum_max_n: int = DEFAULT_POWER_SUM_MAX_N
    bernoulli_max_k: int = DEFAULT_BERNOULLI_MAX_K


# Hits found by a range scan are classified with cheaper oracles.
SEARCH_ORACLE_BOUNDS = OracleBounds(power_sum_max_n=5_000, bernoulli_max_k=200)


@dataclass(frozen=True)
class SondowConfig:
    segment_size: int = DEFAULT_SEGMENT_SIZE
    max_segment_size: int = MAX_SEGMENT_SIZE
    desk_bound: int = DESK_BOUND
    checkpoint_interval: float = DEFAULT_CHECKPOINT_INTERVAL
    data_dir: Path = DEFAULT_DATA_DIR
    budget: FactorBudget = field(default_factory=FactorBudget)
    oracle_bounds: OracleBounds = field(default_factory=OracleBounds)
    search_oracle_bounds: OracleBounds = SEARCH_ORACLE_BOUNDS

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "SondowConfig":
        env = os.environ if environ is None else environ
        config = cls()

        def _int(name: str, default: int) -> int:
            raw = env.get(name)
            if raw is None or raw.strip() == "":
                return default
            try:
                return int(raw)
            except ValueError:
                raise ValueError(f"{name} must be an integer, got {raw!r}")

        raw_interval = env.get("SONDOW_CHECKPOINT_INTERVAL", "").strip()
        try:
            checkpoint_interval = float(raw_interval) if raw_interval else config.checkpoint_interval
        except ValueError:
            raise ValueError(f"SONDOW_CHECKPOINT_INTERVAL must be a number of seconds, got {raw_interval!r}")
        if checkpoint_interval < 0:
            raise ValueError(f"SONDOW_CHECKPOINT_INTERVAL must be >= 0, got {checkpoint_interval}")

        segment_size = _int("SONDOW_SEGMENT_SIZE", config.segment_size)
        if not 1 <= segment_size <= config.max_segment_size:
            raise ValueError(
                f"SONDOW_SEGMENT_SIZE must be in [1, {config.max_segment_size}], got {segment_size}"
            )

        oracle_bounds = OracleBounds(
            power_sum_max_n=_int("SONDOW_POWER_SUM_MAX_N", config.oracle_bounds.power_sum_max_n),
            bernoulli_max_k=_int("SONDOW_BERNOULLI_MAX_K", config.oracle_bounds.bernoulli_max_k),
        )
        budget = replace(
            config.budget,
            trial_limit=_int("SONDOW_TRIAL_LIMIT", config.budget.trial_limit),
            rho_iterations=_int("SONDOW_RHO_ITERATIONS", config.budget.rho_iterations),
            rho_restarts=_int("SONDOW_RHO_RESTARTS", config.budget.rho_restarts),
        )
        data_dir = Path(env["SONDOW_DATA_DIR"]) if env.get("SONDOW_DATA_DIR") else config.data_dir

        return replace(
            config,
            segment_size=segment_size,
            desk_bound=_int("SONDOW_DESK_BOUND", config.desk_bound),
            checkpoint_interval=checkpoint_interval,
            data_dir=data_dir,
            budget=budget,
            oracle_bounds=oracle_bounds,
        )


DEFAULT_CONFIG = SondowConfig()
