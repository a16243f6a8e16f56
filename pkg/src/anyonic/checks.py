from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Check:
    """Outcome of one verification; failures carry a witness, not an exception."""

    name: str
    ok: bool
    witness: Optional[str] = None
    detail: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def as_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = list(self.detail)
        return d


def all_ok(checks) -> bool:
    return all(c.ok for c in checks)
