"""Verification reports: an ordered list of ``{clause, status, witness}``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CycScalar


def jsonable(obj):
    """Deterministic JSON-compatible rendering of witnesses."""
    if isinstance(obj, CycScalar):
        return str(obj.coeffs[0]) if obj.is_rational() else obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: repr(kv[0]))
        if all(isinstance(k, str) for k, _ in items):
            return {k: jsonable(v) for k, v in items}
        return [[jsonable(k), jsonable(v)] for k, v in items]
    if hasattr(obj, "_asdict"):
        return {k: jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        seq = sorted(obj, key=repr) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(x) for x in seq]
    return repr(obj)


@dataclass
class Check:
    clause: str
    status: str
    witness: object = None

    def to_json(self):
        return {"clause": self.clause, "status": self.status, "witness": jsonable(self.witness)}


@dataclass
class Report:
    name: str
    checks: list = field(default_factory=list)

    def add(self, clause: str, ok: bool | None, witness=None) -> Check:
        status = "skip" if ok is None else ("pass" if ok else "fail")
        chk = Check(clause, status, witness)
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.clause, c.status, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == "fail"]

    def status_of(self, clause: str) -> str | None:
        for c in self.checks:
            if c.clause == clause:
                return c.status
        return None

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def __str__(self):
        lines = [f"{self.name}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{c.status}] {c.clause}")
        return "\n".join(lines)
