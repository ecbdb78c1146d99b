from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class InvariantReport:
    """Krull dimension, depth and regularity of ``S/I``, plus how they were obtained.

    Fields a method does not produce are ``None`` (the composite formulas give
    no dimension, for instance).
    """

    dim: Optional[int]
    depth: Optional[int]
    reg: Optional[int]
    method: str
    intermediates: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.method not in ("formula", "oracle"):
            raise ValueError(f"method must be 'formula' or 'oracle', got {self.method!r}")
        for name in ("dim", "depth", "reg"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "depth": self.depth,
            "reg": self.reg,
            "method": self.method,
            "intermediates": dict(self.intermediates),
        }

    def disagreements(self, other: "InvariantReport") -> list[str]:
        """Names of the invariants both reports carry but disagree on."""
        out = []
        for name in ("dim", "depth", "reg"):
            a, b = getattr(self, name), getattr(other, name)
            if a is not None and b is not None and a != b:
                out.append(name)
        return out
