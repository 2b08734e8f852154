# -*- coding: utf-8 -*-
"""실행 설정 (환경 변수 / .env)."""

import logging
import os
from dataclasses import dataclass, field
from typing import Tuple

try:
    from dotenv import load_dotenv
except ImportError:  # pragma: no cover
    load_dotenv = None


DEFAULT_RADII = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


@dataclass(frozen=True)
class MdhSettings:
    max_iso_vertices: int = 12
    workers: int = 1
    numeric_radii: Tuple[float, ...] = field(default=DEFAULT_RADII)
    log_level: str = "WARNING"
    seed: int = 0

    @classmethod
    def from_env(cls, dotenv: bool = True) -> "MdhSettings":
        """MDH_* 환경 변수에서 설정을 읽는다."""
        if dotenv and load_dotenv is not None:
            load_dotenv()
        defaults = cls()
        return cls(
            max_iso_vertices=_env_int("MDH_MAX_ISO_VERTICES", defaults.max_iso_vertices),
            workers=max(1, _env_int("MDH_WORKERS", defaults.workers)),
            log_level=os.getenv("MDH_LOG_LEVEL", defaults.log_level).upper(),
            seed=_env_int("MDH_SEED", defaults.seed),
        )


def _env_int(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logging.warning(f"{name}={raw!r} is not an integer, using {default}")
        return default


_settings = None


def get_settings() -> MdhSettings:
    global _settings
    if _settings is None:
        _settings = MdhSettings.from_env()
    return _settings


def set_settings(settings: MdhSettings) -> None:
    global _settings
    _settings = settings
