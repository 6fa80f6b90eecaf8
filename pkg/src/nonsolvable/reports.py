"""Structured pass/fail/unknown records shared by checks and the harness."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any

VERDICTS = ("pass", "fail", "unknown")


@dataclass
class VerifyReport:
    claim: str
    instance: str
    computed: Any = None
    expected: Any = None
    verdict: str = "unknown"
    seed: int | None = None
    elapsed: float = 0.0
    details: list[str] = field(default_factory=list)
    caps: dict | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"verdict must be one of {VERDICTS}")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["elapsed"] = round(self.elapsed, 4)
        return d


@contextmanager
def timed(report: VerifyReport):
    t0 = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - t0
