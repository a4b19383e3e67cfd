"""
Reports Module

Structured outcome of a verification claim. Every verify routine returns
Report objects instead of raising, so suites can aggregate and store them.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    WITNESS = "witness"


@dataclass
class Report:
    claim: str
    status: Status
    signature: Optional[tuple] = None
    group: Optional[str] = None
    details: dict = field(default_factory=dict)
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status in (Status.PASS, Status.WITNESS)

    @property
    def label(self) -> str:
        parts = [self.claim]
        if self.signature is not None:
            parts.append(f"Cl({self.signature[0]},{self.signature[1]})")
        if self.group:
            parts.append(self.group)
        return " ".join(parts)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "signature": list(self.signature) if self.signature is not None else None,
            "group": self.group,
            "status": self.status.value,
            "details": self.details,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Report":
        sig = obj.get("signature")
        return cls(
            claim=obj["claim"],
            status=Status(obj["status"]),
            signature=tuple(sig) if sig is not None else None,
            group=obj.get("group"),
            details=obj.get("details") or {},
            seed=obj.get("seed"),
        )


def check(claim: str, ok: bool, signature=None, group=None, seed=None, **details) -> Report:
    """Build a pass/fail report from a boolean outcome."""
    return Report(
        claim=claim,
        status=Status.PASS if ok else Status.FAIL,
        signature=signature,
        group=group,
        details=details,
        seed=seed,
    )


def summarize(reports: Iterable[Report]) -> dict:
    counts = {status.value: 0 for status in Status}
    total = 0
    for report in reports:
        counts[report.status.value] += 1
        total += 1
    overall = Status.FAIL if counts[Status.FAIL.value] else Status.PASS
    return {"total": total, "counts": counts, "overall": overall.value}
