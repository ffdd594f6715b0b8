"""Wheel operation records: contraction steps and traces."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.models.coloring import Coloring


@dataclass
class ContractionStep:
    """One contraction of a k-wheel, recorded so that it can be undone.

    ``site_data`` keeps the rotations of every vertex within distance one of
    the removed and merged vertices, the vertex map into the contracted
    graph, and fingerprints of both graphs.
    """

    kind: int
    center: int
    merged_pairs: List[List[int]] = field(default_factory=list)
    coloring_before: Optional[Coloring] = None
    coloring_after: Optional[Coloring] = None
    site_data: Dict[str, Any] = field(default_factory=dict)
    six_wheel_type: Optional[str] = None

    @property
    def order_drop(self) -> int:
        before = self.site_data.get("pre_order", 0)
        after = self.site_data.get("post_order", 0)
        return before - after

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "center": self.center,
            "merged_pairs": [list(group) for group in self.merged_pairs],
            "coloring_before": self.coloring_before.to_dict() if self.coloring_before else None,
            "coloring_after": self.coloring_after.to_dict() if self.coloring_after else None,
            "site_data": self.site_data,
            "six_wheel_type": self.six_wheel_type,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ContractionStep":
        before = data.get("coloring_before")
        after = data.get("coloring_after")
        return cls(
            kind=int(data["kind"]),
            center=int(data["center"]),
            merged_pairs=[list(group) for group in data.get("merged_pairs", [])],
            coloring_before=Coloring.from_dict(before) if before else None,
            coloring_after=Coloring.from_dict(after) if after else None,
            site_data=dict(data.get("site_data", {})),
            six_wheel_type=data.get("six_wheel_type"),
        )


@dataclass
class ContractionTrace:
    """Ordered contraction steps from an initial graph down to a final one."""

    steps: List[ContractionStep] = field(default_factory=list)
    initial_certificate: str = ""
    final_certificate: str = ""

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def kinds(self) -> List[int]:
        return [step.kind for step in self.steps]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "initial_certificate": self.initial_certificate,
            "final_certificate": self.final_certificate,
            "steps": [step.to_dict() for step in self.steps],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ContractionTrace":
        return cls(
            steps=[ContractionStep.from_dict(s) for s in data.get("steps", [])],
            initial_certificate=data.get("initial_certificate", ""),
            final_certificate=data.get("final_certificate", ""),
        )
