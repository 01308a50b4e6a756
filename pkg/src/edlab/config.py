"""Run-time caps and enumeration settings, optionally read from a JSON file.

The file named by EDLAB_CONFIG may contain

    {"caps": {"cayley": 512, "homology": 48, "fp-pair": 12, "coset-rows": 2000000},
     "strategy": "hlt", "parallelism": 1}

Missing keys keep their defaults.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace
from pathlib import Path

from .fp import COSET_CAP
from .groups import CAYLEY_CAP
from .homology import HOMOLOGY_CAP
from .tensor import PAIR_CAP

ENV_VAR = "EDLAB_CONFIG"


@dataclass(frozen=True)
class Config:
    cayley: int = CAYLEY_CAP
    homology: int = HOMOLOGY_CAP
    fp_pair: int = PAIR_CAP
    coset_rows: int = COSET_CAP
    strategy: str = "hlt"
    parallelism: int = 1

    def with_caps(self, **kw) -> "Config":
        return replace(self, **kw)


_CAP_KEYS = {"cayley": "cayley", "homology": "homology", "fp-pair": "fp_pair", "coset-rows": "coset_rows"}


def from_dict(data: dict) -> Config:
    kw = {}
    caps = data.get("caps", {})
    unknown = set(caps) - set(_CAP_KEYS)
    if unknown:
        raise ValueError(f"unknown caps in config: {sorted(unknown)}")
    for key, field in _CAP_KEYS.items():
        if key in caps:
            v = caps[key]
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"cap {key!r} must be a positive integer")
            kw[field] = v
    if "strategy" in data:
        if data["strategy"] not in ("hlt", "felsch"):
            raise ValueError("strategy must be 'hlt' or 'felsch'")
        kw["strategy"] = data["strategy"]
    if "parallelism" in data:
        p = data["parallelism"]
        if not isinstance(p, int) or p < 1:
            raise ValueError("parallelism must be a positive integer")
        kw["parallelism"] = p
    return Config(**kw)


def load(path: str | Path | None = None) -> Config:
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return Config()
    with open(path) as fh:
        return from_dict(json.load(fh))
