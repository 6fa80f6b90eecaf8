"""Caps and defaults shared by every computation."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

MODES = ("auto", "exact", "mc")


@dataclass(frozen=True)
class Config:
    exact_cap: int = 10 ** 6          # element/class enumeration
    lattice_cap: int = 2 * 10 ** 4    # Frattini and subgroup classes
    coset_cap: int = 10 ** 5          # coset-action index
    degree_cap: int = 10 ** 4         # construction outputs
    mc_samples: int = 64
    mc_stagnant: int = 3
    seed: int = 0
    mode: str = "auto"

    def __post_init__(self):
        for f in ("exact_cap", "lattice_cap", "coset_cap", "degree_cap", "mc_samples", "mc_stagnant"):
            if getattr(self, f) <= 0:
                raise ValueError(f"{f} must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    def with_(self, **kw) -> "Config":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        return cls.from_dict(json.loads(Path(path).read_text()))


DEFAULT = Config()
