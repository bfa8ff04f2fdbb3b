"""Run configuration shared by the CLI, the scripts and the acceptance suite."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .errors import BadParameter


@dataclass(frozen=True)
class RunConfig:
    m: int = 1
    n: int = 1
    seed: int = 0
    radius_cap: int = 6
    level_cap: int = 8
    search_budget: int = 1_000_000
    format: str = "text"  # or "json"

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise BadParameter("ranks must be positive")
        if min(self.radius_cap, self.level_cap, self.search_budget) < 1:
            raise BadParameter("caps and budgets must be positive")
        if not 0 <= self.seed < 2 ** 64:
            raise BadParameter("seed must fit in 64 bits")
        if self.format not in ("text", "json"):
            raise BadParameter(f"unknown format {self.format!r}")

    def as_record(self) -> dict:
        return asdict(self)
