"""Run configuration shared by the CLI subcommands."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace

from .errors import InputError
from .witness import WitnessParameters

_POSITIVE = ("ball_cap", "closure_cap", "root_cap", "conjugacy_budget", "n_straight", "hull_window", "wpd_samples")


@dataclass(frozen=True)
class RunConfig:
    ball_cap: int = 5_000_000
    closure_cap: int = 100_000
    root_cap: int = 100_000
    conjugacy_budget: int = 100_000
    n_straight: int = 8
    k_power: int | None = None
    root_depth: int = 8
    hull_window: int = 4
    separation_depth: int = 4
    wpd_samples: int = 3
    out: str | None = None
    verbosity: int = 0

    def __post_init__(self):
        for name in _POSITIVE:
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise InputError(f"{name} must be a positive integer, got {v!r}")
        if self.k_power is not None and (not isinstance(self.k_power, int) or self.k_power < 1):
            raise InputError(f"k_power must be a positive integer, got {self.k_power!r}")
        for name in ("root_depth", "separation_depth", "verbosity"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InputError(f"{name} must be a non-negative integer, got {v!r}")

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise InputError("config must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise InputError(f"unknown config keys {unknown}")
        return cls(**data)

    @classmethod
    def load(cls, path) -> "RunConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def updated(self, **overrides) -> "RunConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def witness_parameters(self, w0: dict | None = None) -> WitnessParameters:
        return WitnessParameters(
            n_straight=self.n_straight,
            k_power=self.k_power,
            root_depth=self.root_depth,
            hull_window=self.hull_window,
            separation_depth=self.separation_depth,
            wpd_samples=self.wpd_samples,
            root_cap=self.root_cap,
            conjugacy_budget=self.conjugacy_budget,
            closure_cap=self.closure_cap,
            ball_cap=self.ball_cap,
            w0=w0,
        )
