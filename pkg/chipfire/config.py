"""
Solver limits and their environment overrides.
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Mapping, Optional

from .exceptions import MalformedInput

ENV_PREFIX = "CHIPFIRE_"


@dataclass(frozen=True)
class SolverConfig:
    """Caps shared by every solver entry point."""

    group_order_cap: int = 10_000
    burning_round_cap: int = 1_000_000
    greedy_step_cap: int = 1_000_000

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "SolverConfig":
        """Build a config, overriding defaults from CHIPFIRE_* variables."""
        environ = os.environ if environ is None else environ
        overrides = {}
        for spec in fields(cls):
            key = ENV_PREFIX + spec.name.upper()
            if key not in environ:
                continue
            try:
                value = int(environ[key])
            except ValueError:
                raise MalformedInput(f"{key} must be an integer", environ[key]) from None
            if value < 1:
                raise MalformedInput(f"{key} must be positive", value)
            overrides[spec.name] = value
        return cls(**overrides)

    def with_caps(
        self,
        group_order_cap: Optional[int] = None,
        burning_round_cap: Optional[int] = None,
    ) -> "SolverConfig":
        """Return a copy with the given caps replaced."""
        changes = {}
        if group_order_cap is not None:
            changes["group_order_cap"] = group_order_cap
        if burning_round_cap is not None:
            changes["burning_round_cap"] = burning_round_cap
        return replace(self, **changes)


DEFAULT_CONFIG = SolverConfig()
