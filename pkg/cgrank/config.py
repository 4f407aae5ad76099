import os
import math
import logging
from dataclasses import dataclass, replace, asdict
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from .errors import ConfigError

logger = logging.getLogger(__name__)

DEFAULT_ENUM_BUDGET = 2_000_000
DEFAULT_GAP_CAP = 64


@dataclass(frozen=True)
class Settings:
    """Runtime knobs shared by the library, the suites and the CLI."""
    enum_budget: int = DEFAULT_ENUM_BUDGET
    threads: int = 1
    seed: int = 1
    gap_cap: int = DEFAULT_GAP_CAP
    max_rank: Optional[int] = None
    log_level: str = "INFO"

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Return a copy with every non-None override applied."""
        values = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(values) - set(asdict(self))
        if unknown:
            raise ConfigError(f"unknown settings: {', '.join(sorted(unknown))}")
        for name in ("enum_budget", "seed", "gap_cap", "max_rank"):
            if name in values and values[name] < 0:
                raise ConfigError(f"{name} must be nonnegative, got {values[name]}")
        if values.get("threads", 1) < 1:
            raise ConfigError(f"threads must be at least 1, got {values['threads']}")
        return replace(self, **values)

    def rank_cap(self, n: int) -> int:
        """Round cap for closure iteration in dimension n."""
        if self.max_rank is not None:
            return self.max_rank
        return default_rank_cap(n)

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


def default_rank_cap(n: int) -> int:
    """ceil(n^2 * (3 + log2(n+1))), an O(n^2 log n) allowance for cube polytopes."""
    if n <= 0:
        return 0
    return math.ceil(n * n * (3 + math.log2(n + 1)))


def _read_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ConfigError(f"{name} must be nonnegative, got {value}")
    return value


def load_settings() -> Settings:
    """Load settings from the environment (and a .env file if present)."""
    load_dotenv()
    settings = Settings(
        enum_budget=_read_int("CGRANK_ENUM_BUDGET", DEFAULT_ENUM_BUDGET),
        threads=_read_int("CGRANK_THREADS", 1) or 1,
        seed=_read_int("CGRANK_SEED", 1),
        gap_cap=_read_int("CGRANK_GAP_CAP", DEFAULT_GAP_CAP),
        max_rank=_read_int("CGRANK_MAX_RANK", None),
        log_level=os.getenv("CGRANK_LOG_LEVEL", "INFO").upper(),
    )
    if settings.log_level not in logging.getLevelNamesMapping():
        raise ConfigError(f"CGRANK_LOG_LEVEL is not a logging level: {settings.log_level}")
    logger.debug(f"Loaded settings: {settings}")
    return settings
