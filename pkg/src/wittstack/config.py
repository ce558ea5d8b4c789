"""Runtime configuration: Witt polynomial caps, default precision, output format."""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class Config:
    max_p: int = 7
    max_n: int = 4
    default_precision: int = 64
    output_format: str = "table"

    def __post_init__(self):
        if self.max_p < 2 or self.max_n < 1 or self.default_precision < 1:
            raise DomainError("caps and precision must be positive")
        if self.output_format not in ("table", "json"):
            raise DomainError(f"unknown output format {self.output_format!r}")


def _from_env() -> Config:
    cfg = Config()
    if "WITTSTACK_MAX_P" in os.environ:
        cfg = replace(cfg, max_p=int(os.environ["WITTSTACK_MAX_P"]))
    if "WITTSTACK_MAX_N" in os.environ:
        cfg = replace(cfg, max_n=int(os.environ["WITTSTACK_MAX_N"]))
    return cfg


_current = _from_env()


def get_config() -> Config:
    return _current


def set_config(cfg: Config) -> Config:
    """Install ``cfg`` globally and return the previous configuration."""
    global _current
    old, _current = _current, cfg
    return old
