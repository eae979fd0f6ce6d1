"""Report records shared by the audit and verification operations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Literal

Verdict = Literal["equal", "mismatch"]


def verdict(ok: bool) -> Verdict:
    return "equal" if ok else "mismatch"


@dataclass
class AuditReport:
    """Outcome of checking one printed claim against ground truth.

    A ``mismatch`` is a finding about the claim, not an error in the tool.
    """

    claim: str
    instance: str
    expected: Any
    actual: Any
    verdict: Verdict
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "equal"

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "instance": self.instance,
            "expected": self.expected,
            "actual": self.actual,
            "verdict": self.verdict,
        }
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class CountAudit:
    """A printed count (or inequality) next to its exact ground-truth value.

    ``relation="eq"`` asks for equality; ``"gt"`` asks that the printed side
    is strictly larger. Values are ``int`` or ``Fraction``.
    """

    formula_name: str
    params: dict
    paper_value: int | Fraction
    oracle_value: int | Fraction
    relation: Literal["eq", "gt"] = "eq"

    @property
    def verdict(self) -> Verdict:
        if self.relation == "gt":
            return verdict(self.paper_value > self.oracle_value)
        return verdict(self.paper_value == self.oracle_value)

    def to_json(self) -> dict:
        # big integers and rationals travel as decimal strings
        out = {
            "formula": self.formula_name,
            **self.params,
            "paper_value": str(self.paper_value),
            "oracle_value": str(self.oracle_value),
            "verdict": self.verdict,
        }
        if self.relation != "eq":
            out["relation"] = self.relation
        return out


def dumps(obj: Any) -> str:
    """Canonical one-line JSON used for every machine-readable output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
