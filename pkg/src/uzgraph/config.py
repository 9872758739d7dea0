"""Enumeration and search limits: defaults, overridable from .env with UZG_LIMIT_ prefix."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Optional

from dotenv import load_dotenv

ENV_PREFIX = "UZG_"
LIMIT_PREFIX = ENV_PREFIX + "LIMIT_"


@dataclass(frozen=True)
class Limits:
    """Vertex/element caps for every exponential or enumerative computation.

    Exceeding a cap never truncates: ideal enumeration raises, invariant
    searches report "skipped".
    """

    ideal_enumeration: int = 512
    hamiltonian: int = 32
    chromatic: int = 40
    clique: int = 40
    independence: int = 40
    domination: int = 32
    planarity_subdivision: int = 64
    subset_oracle: int = 16

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"limit {f.name} must be a positive integer, got {value!r}")

    @classmethod
    def from_env(cls, environ: Optional[dict[str, str]] = None) -> Limits:
        """Build limits from variables prefixed UZG_LIMIT_ (after loading .env)."""
        if environ is None:
            load_dotenv()
            environ = dict(os.environ)
        overrides = {}
        names = {f.name for f in fields(cls)}
        for key, raw in environ.items():
            if not key.startswith(LIMIT_PREFIX) or not raw:
                continue
            name = key[len(LIMIT_PREFIX):].lower()
            if name not in names:
                continue
            try:
                overrides[name] = int(raw)
            except ValueError:
                raise ValueError(f"{key} must be an integer, got {raw!r}") from None
        try:
            return cls(**overrides)
        except ValueError as e:
            raise ValueError(f"invalid {LIMIT_PREFIX}* setting: {e}") from None

    def with_overrides(self, **kwargs: Optional[int]) -> Limits:
        """Return a copy with the non-None keyword values replaced."""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def to_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def env_default(name: str, default: Optional[str] = None) -> Optional[str]:
    """Value of UZG_<NAME> if set and non-empty, else ``default``."""
    value = os.environ.get(ENV_PREFIX + name.upper())
    return value if value else default
