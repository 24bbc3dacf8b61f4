from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import json
from typing import Any, Dict, List


def to_jsonable(value: Any) -> Any:
    """Recursively turn model values into plain JSON types."""
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if hasattr(value, "to_list"):
        return to_jsonable(value.to_list())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(v) for v in value), key=lambda item: json.dumps(item, sort_keys=True))
    return value


@dataclass
class Report:
    """One CLI run: echoed inputs, results, and the statements they instantiate."""

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    provenance: List[str] = field(default_factory=list)
    seed: int = 0

    def __post_init__(self) -> None:
        self.command = (self.command or "").strip()
        if not self.command:
            raise ValueError("Report command cannot be empty")

    def add(self, key: str, value: Any, cites: str = "") -> None:
        self.results[key] = value
        if cites and cites not in self.provenance:
            self.provenance.append(cites)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs": to_jsonable(self.inputs),
            "results": to_jsonable(self.results),
            "provenance": list(self.provenance),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)
