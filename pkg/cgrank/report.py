"""Verification reports: per-instance assertions, JSON output and pandas summaries."""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


@dataclass
class Assertion:
    claim: str
    instance: str
    status: Status
    witness: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "instance": self.instance,
            "status": self.status.value,
            "witness": self.witness,
        }


@dataclass
class VerificationReport:
    suite: str
    config: Dict[str, Any] = field(default_factory=dict)
    assertions: List[Assertion] = field(default_factory=list)
    instances: int = 0
    notes: Dict[str, Any] = field(default_factory=dict)
    wall_time: Optional[float] = None

    def add(self, claim: str, instance: str, ok: bool, /, **witness: Any) -> Assertion:
        """Record a checked claim together with its witness data."""
        status = Status.PASS if ok else Status.FAIL
        entry = Assertion(claim, instance, status, witness)
        self.assertions.append(entry)
        if not ok:
            logger.error(f"[{self.suite}] {claim} failed on {instance}: {witness}")
        return entry

    def skip(self, claim: str, instance: str, reason: str, /) -> Assertion:
        entry = Assertion(claim, instance, Status.SKIPPED, {"reason": reason})
        self.assertions.append(entry)
        logger.warning(f"[{self.suite}] {claim} skipped on {instance}: {reason}")
        return entry

    def extend(self, other: "VerificationReport"):
        self.assertions.extend(other.assertions)
        self.instances += other.instances
        for key, value in other.notes.items():
            self.notes.setdefault(key, []).extend(value if isinstance(value, list) else [value])

    def count(self, status: Status) -> int:
        return sum(1 for a in self.assertions if a.status is status)

    @property
    def failed(self) -> bool:
        return self.count(Status.FAIL) > 0

    def as_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        data = {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "instances": self.instances,
            "config": self.config,
            "counts": {s.value: self.count(s) for s in Status},
            "notes": self.notes,
            "assertions": [a.as_dict() for a in self.assertions],
        }
        if include_timing and self.wall_time is not None:
            data["wall_time"] = round(self.wall_time, 3)
        return data

    def to_json(self, include_timing: bool = False) -> str:
        """Byte-stable JSON (sorted keys) unless timing is requested."""
        return json.dumps(self.as_dict(include_timing), sort_keys=True, indent=2, default=str) + "\n"

    def to_frame(self) -> pd.DataFrame:
        rows = [{"claim": a.claim, "instance": a.instance, "status": a.status.value} for a in self.assertions]
        return pd.DataFrame(rows, columns=["claim", "instance", "status"])

    def summary(self) -> pd.DataFrame:
        """Assertion counts per claim and status."""
        df = self.to_frame()
        if df.empty:
            return pd.DataFrame(columns=[s.value for s in Status])
        table = df.groupby(["claim", "status"]).size().unstack(fill_value=0)
        return table.reindex(columns=[s.value for s in Status], fill_value=0)

    def to_text(self) -> str:
        lines = [
            f"suite {self.suite}: {self.instances} instances, "
            f"{self.count(Status.PASS)} pass, {self.count(Status.FAIL)} fail, {self.count(Status.SKIPPED)} skipped"
        ]
        if self.assertions:
            lines.append(self.summary().to_string())
        for a in self.assertions:
            if a.status is Status.FAIL:
                lines.append(f"FAIL {a.claim} on {a.instance}: {json.dumps(a.witness, sort_keys=True, default=str)}")
        return "\n".join(lines) + "\n"
