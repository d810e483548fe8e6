"""
spacing Configuration Management
Handles environment settings and benchmark configuration files
"""

import threading
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import orjson
from pydantic import BaseModel, ValidationError, field_validator
from pydantic_settings import BaseSettings

from spacing.utils.constants import BENCH, GENERATOR, LIMITS
from spacing.utils.errors import InstanceFormatError
from spacing.utils.version import VERSION


class Settings(BaseSettings):
    """Process-wide settings read from ``SPACING_*`` environment variables."""
    app_name: str = "spacing"
    app_version: str = VERSION

    log_level: str = "WARNING"
    log_file: Optional[Path] = None
    dev_mode: bool = False

    enumeration_cap: int = LIMITS.ENUMERATION_CAP
    bounded_s_cap: int = LIMITS.BOUNDED_S_CAP
    brute_sat_max_vars: int = LIMITS.BRUTE_SAT_MAX_VARS

    solve_timeout: float = LIMITS.SOLVE_TIMEOUT
    bench_timeout: float = LIMITS.BENCH_TIMEOUT
    bench_jobs: int = 1

    class Config:
        env_file = ".env"
        env_prefix = "SPACING_"
        extra = "ignore"


class BenchConfig(BaseModel):
    """One benchmark run: the grid, the models and the timeout discipline."""
    grid: List[Tuple[int, int, int]] = BENCH.grid()
    instances: int = BENCH.INSTANCES_PER_CELL
    timeout: float = LIMITS.BENCH_TIMEOUT
    models: List[str] = list(BENCH.MODELS)
    seed: int = 0
    extended_fraction: float = 0.0
    onset_basis: str = "pattern"
    var_order: str = "lex"
    jobs: int = 1

    @field_validator("instances", "jobs")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value

    @field_validator("timeout")
    @classmethod
    def _positive_timeout(cls, value: float) -> float:
        if value <= 0:
            raise ValueError("timeout must be > 0")
        return value

    @field_validator("models")
    @classmethod
    def _known_models(cls, value: List[str]) -> List[str]:
        unknown = [m for m in value if m not in BENCH.MODELS]
        if unknown:
            raise ValueError(f"unknown models: {', '.join(unknown)}")
        return value

    @field_validator("grid")
    @classmethod
    def _valid_cells(cls, value: List[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
        for h, p1, kh in value:
            if h < 1 or p1 < GENERATOR.MIN_P1 or kh < 1:
                raise ValueError(f"invalid grid cell ({h}, {p1}, {kh})")
        return value

    @field_validator("extended_fraction")
    @classmethod
    def _fraction(cls, value: float) -> float:
        if not 0.0 <= value < 1.0:
            raise ValueError("extended_fraction must lie in [0, 1)")
        return value

    @field_validator("onset_basis")
    @classmethod
    def _basis(cls, value: str) -> str:
        if value not in ("pattern", "beats"):
            raise ValueError("onset_basis must be 'pattern' or 'beats'")
        return value

    @field_validator("var_order")
    @classmethod
    def _var_order(cls, value: str) -> str:
        if value not in ("lex", "first-fail"):
            raise ValueError("var_order must be 'lex' or 'first-fail'")
        return value


# Thread-safe singleton
_settings_instance: Optional[Settings] = None
_settings_lock = threading.Lock()


def get_settings() -> Settings:
    """Get cached settings from the environment (thread-safe)."""
    global _settings_instance

    if _settings_instance is None:
        with _settings_lock:
            if _settings_instance is None:
                _settings_instance = Settings()

    return _settings_instance


def reload_settings() -> Settings:
    """Drop the cached settings and read the environment again."""
    global _settings_instance

    with _settings_lock:
        _settings_instance = Settings()

    return _settings_instance


def default_bench_config() -> BenchConfig:
    """Bench defaults with the timeout and job count taken from settings."""
    settings = get_settings()
    return BenchConfig(timeout=settings.bench_timeout, jobs=settings.bench_jobs)


def load_bench_config(path: Path) -> BenchConfig:
    """Load a benchmark configuration from a JSON file on top of the defaults."""
    try:
        data = orjson.loads(Path(path).read_bytes())
    except (OSError, orjson.JSONDecodeError) as e:
        raise InstanceFormatError(f"cannot read bench config {path}: {e}") from e

    return merge_bench_config(default_bench_config(), data)


def save_bench_config(config: BenchConfig, path: Path) -> None:
    """Save a benchmark configuration to a JSON file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(orjson.dumps(config.model_dump(), option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS))


def merge_bench_config(config: BenchConfig, updates: Dict[str, Any]) -> BenchConfig:
    """Return a new config with ``updates`` deep-merged over ``config``."""
    config_dict = config.model_dump()
    _deep_merge(config_dict, {k: v for k, v in updates.items() if v is not None})
    try:
        return BenchConfig(**config_dict)
    except ValidationError as e:
        raise InstanceFormatError(f"invalid bench config: {e}") from e


def _deep_merge(base: dict, updates: dict) -> None:
    """Deep merge updates into base dict."""
    for key, value in updates.items():
        if key in base and isinstance(base[key], dict) and isinstance(value, dict):
            _deep_merge(base[key], value)
        else:
            base[key] = value
