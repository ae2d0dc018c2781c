"""Result record shared by the identity checks and the ODE checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .numeric import rational_to_json


def to_jsonable(value: Any) -> Any:
    """Serialize rationals, polynomials, series and containers of them."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return rational_to_json(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


@dataclass
class IdentityReport:
    identity_id: str
    parameters: dict
    holds: bool
    lhs: Any = None
    rhs: Any = None
    details: dict = field(default_factory=dict)

    def sort_key(self):
        return (self.identity_id, sorted((k, str(v)) for k, v in self.parameters.items()))

    def to_json(self) -> dict:
        out = {
            "identity_id": self.identity_id,
            "parameters": to_jsonable(self.parameters),
            "holds": self.holds,
        }
        if self.details:
            out["details"] = to_jsonable(self.details)
        if not self.holds:
            out["lhs"] = to_jsonable(self.lhs)
            out["rhs"] = to_jsonable(self.rhs)
        return out

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __bool__(self):
        return self.holds


def report(identity_id: str, parameters: dict, lhs, rhs, **details) -> IdentityReport:
    """Compare two exact values; keep both sides only when they differ."""
    holds = lhs == rhs
    return IdentityReport(
        identity_id,
        parameters,
        holds,
        None if holds else lhs,
        None if holds else rhs,
        details,
    )
