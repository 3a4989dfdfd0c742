"""
src/config.py

Runtime settings.

Defaults are the desk-scale caps. Any of them can be overridden from the
environment or from a .env file in the working directory:

    ARBOR_ENUM_CAP=7
    ARBOR_HASSE_CAP=7
    ARBOR_CHECK_DEGREE=6
    ARBOR_SEED=0
    ARBOR_RELATION_SAMPLES=200
    ARBOR_DENDRIFORM_SAMPLES=100

Nothing here is required; a missing variable means the default.
"""

import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError

load_dotenv()


def _int_from_env(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Caps and sampling parameters.

    Attributes:
        enum_cap: Largest degree `enum` and `embed` will materialize
        hasse_cap: Largest degree for which a Hasse diagram is built
        check_degree: Default max degree of the exhaustive check suites
        seed: Seed of every random sample drawn by the check suites
        relation_samples: Random triples drawn at degree 3 for the relations check
        dendriform_samples: Random rational combinations for the dendriform check
    """
    enum_cap: int = 7
    hasse_cap: int = 7
    check_degree: int = 6
    seed: int = 0
    relation_samples: int = 200
    dendriform_samples: int = 100

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from environment variables (after .env is loaded)."""
        return cls(
            enum_cap=_int_from_env("ARBOR_ENUM_CAP", cls.enum_cap),
            hasse_cap=_int_from_env("ARBOR_HASSE_CAP", cls.hasse_cap),
            check_degree=_int_from_env("ARBOR_CHECK_DEGREE", cls.check_degree),
            seed=_int_from_env("ARBOR_SEED", cls.seed),
            relation_samples=_int_from_env("ARBOR_RELATION_SAMPLES", cls.relation_samples),
            dendriform_samples=_int_from_env("ARBOR_DENDRIFORM_SAMPLES", cls.dendriform_samples),
        )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, read from the environment on first use."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(**overrides: int) -> Settings:
    """
    Replace selected settings for the rest of the process (CLI flags).

    Raises:
        ConfigError: unknown setting name or negative value
    """
    global _settings
    current = get_settings()
    for name, value in overrides.items():
        if not hasattr(current, name):
            raise ConfigError(f"unknown setting {name!r}")
        if value < 0:
            raise ConfigError(f"{name} must be >= 0, got {value}")
    _settings = replace(current, **overrides)
    return _settings


def reset_settings() -> None:
    """Forget overrides; the next get_settings() reads the environment again."""
    global _settings
    _settings = None
