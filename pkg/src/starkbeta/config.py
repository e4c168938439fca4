"""Run configuration for suites and the CLI: validated up front and
serialized into every report stream for reproducibility."""

from __future__ import annotations

import hashlib
import json
import random
import zlib
from dataclasses import dataclass

from .padic import is_prime

DEFAULT_PRIMES = (3, 5, 7)
QUICK_M_MAX = 12
FULL_M_MAX = 30


@dataclass(frozen=True)
class RunConfig:
    primes: tuple = DEFAULT_PRIMES
    precision: int = 12          # p-adic absolute precision N
    digits: int = 60             # real working digits D
    m_min: int = 3
    m_max: int | None = None     # None: 12 with --quick, 30 otherwise
    quick: bool = False
    seed: int = 0
    fmt: str = "json"

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(self.primes))
        for p in self.primes:
            if p == 2 or not is_prime(p):
                raise ValueError(f"invalid odd prime {p}")
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.digits < 15:
            raise ValueError("digits must be >= 15")
        if self.m_min < 3:
            raise ValueError("conductors start at 3")
        if self.m_max is not None and self.m_max < self.m_min:
            raise ValueError("empty conductor range")
        if self.fmt not in ("json", "tsv", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")

    @property
    def conductor_max(self) -> int:
        if self.m_max is not None:
            return self.m_max
        return QUICK_M_MAX if self.quick else FULL_M_MAX

    def conductors(self, cap: int | None = None):
        hi = self.conductor_max if cap is None else min(cap, self.conductor_max)
        return range(self.m_min, hi + 1)

    def as_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "precision": self.precision,
            "digits": self.digits,
            "m_min": self.m_min,
            "m_max": self.conductor_max,
            "quick": self.quick,
            "seed": self.seed,
            "format": self.fmt,
        }

    def config_hash(self) -> str:
        blob = json.dumps(self.as_dict(), sort_keys=True,
                          separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:12]

    def rng(self, name: str) -> random.Random:
        """Deterministic per-suite generator derived from the seed."""
        return random.Random(self.seed * 1000003 + zlib.crc32(name.encode()))
