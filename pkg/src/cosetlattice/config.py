"""Runtime limits.  Defaults are module level; a JSON config file may override them."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Limits:
    # Sp(6,2) has order 1,451,520
    max_group_order: int = 2_000_000
    max_faces: int = 5_000_000
    # dense boundary matrices above this many entries use the sparse exact path
    dense_rank_entries: int = 20_000_000


_current = Limits()


def limits() -> Limits:
    return _current


def set_limits(**overrides) -> Limits:
    global _current
    _current = replace(_current, **{k: v for k, v in overrides.items() if v is not None})
    return _current


def load_config(path) -> Limits:
    """Read ``{"max_group_order": ..., "max_faces": ...}`` and install it."""
    data = json.loads(Path(path).read_text())
    known = {f.name for f in fields(Limits)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return set_limits(**data)
