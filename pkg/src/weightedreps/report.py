"""Verification outcome records and their JSON/CSV/text forms."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

IDENTITY_IDS = (
    "thm1",
    "thm1_2adic",
    "thm2",
    "thm3",
    "thm4",
    "prop21_2",
    "prod_formula",
    "eta_quotient",
    "lambert",
    "exponent_roundtrip",
    "km_recursion",
)


@dataclass(frozen=True)
class Failure:
    n: int
    lhs: int
    rhs: int

    def to_dict(self) -> dict:
        return {"n": self.n, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass
class IdentityReport:
    identity: str
    params: dict
    range: tuple[int, int]
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    @classmethod
    def build(cls, identity, params, rng, failures, t0, extra=None) -> IdentityReport:
        elapsed = int(round((time.perf_counter() - t0) * 1000))
        return cls(identity, dict(params), tuple(rng), list(failures), elapsed, dict(extra or {}))

    def sort_key(self):
        return (self.identity, sorted(self.params.items()), self.range)

    def to_dict(self) -> dict:
        d = {
            "identity": self.identity,
            "params": dict(self.params),
            "range": list(self.range),
            "status": self.status,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }
        if self.extra:
            d["extra"] = self.extra
        return d

    @classmethod
    def from_dict(cls, d: dict) -> IdentityReport:
        failures = [Failure(f["n"], int(f["lhs"]), int(f["rhs"])) for f in d["failures"]]
        rep = cls(d["identity"], dict(d["params"]), tuple(d["range"]), failures,
                  d["elapsed_ms"], dict(d.get("extra", {})))
        if rep.status != d["status"]:
            raise ValueError("status field disagrees with failures")
        return rep

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        lo, hi = self.range
        line = f"{self.status.upper():4} {self.identity:<18} {params:<12} [{lo}, {hi}] {self.elapsed_ms} ms"
        if self.failures:
            line += f"  ({len(self.failures)} failures, first n={self.failures[0].n})"
        return line


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, integers only."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def compare_series(lhs, rhs) -> list[Failure]:
    """Failures at each exponent below the common order where coefficients differ."""
    m = min(len(lhs), len(rhs))
    return [Failure(n, a, b) for n, (a, b) in enumerate(zip(lhs[:m], rhs[:m])) if a != b]
