"""Verdict containers shared by the property checkers and the harness."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class PropertyReport:
    """Outcome of a (ring, property) query with replayable evidence.

    `witness` carries data certifying a true verdict (e.g. a shift found
    for a sample input); `counterexample` carries the failing input for a
    false one.  Both are plain JSON-ready dicts with elements formatted
    as strings.
    """

    ring: str
    prop: str
    verdict: bool
    witness: dict | None = None
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "ring": self.ring,
            "property": self.prop,
            "verdict": self.verdict,
            "witness": self.witness,
            "counterexample": self.counterexample,
            "details": self.details,
        }
