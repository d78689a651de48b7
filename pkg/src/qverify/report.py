"""Per-case check reports."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckReport", "PASS", "FAIL", "ERROR", "jsonable"]

PASS = "pass"
FAIL = "fail"
ERROR = "error"


def jsonable(value):
    """Params as JSON-friendly values; rationals become "p/q" strings."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


@dataclass
class CheckReport:
    id: str
    params: dict
    status: str
    detail: str = ""
    elapsed_micros: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self, timings: bool = False) -> dict:
        out = {"id": self.id, "params": jsonable(self.params), "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.notes:
            out["notes"] = list(self.notes)
        if timings:
            out["elapsedMicros"] = self.elapsed_micros
        return out
