"""Solver result containers."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import EVALUATORS, Digraph, Ordering


@dataclass
class Counters:
    """Work counters carried by every report."""

    table_entries: int = 0
    triangles: int = 0
    calls: int = 0

    def merge(self, other: "Counters") -> None:
        self.table_entries += other.table_entries
        self.triangles += other.triangles
        self.calls += other.calls

    def as_dict(self) -> dict[str, int]:
        return {"table_entries": self.table_entries,
                "triangles": self.triangles,
                "calls": self.calls}


@dataclass
class SolveReport:
    """An ordering, the objective value it achieves, and bookkeeping.

    value always equals re-evaluating the ordering with the matching
    evaluator; finish() enforces that.
    """

    objective: str
    value: int
    ordering: Ordering
    lower_bound: int | None
    stats: Counters
    millis: float


@dataclass
class ApproxReport(SolveReport):
    """SolveReport plus the approximation certificate."""

    factor: Fraction = Fraction(1)
    cuts: tuple = ()
    trace: tuple = ()


def finish(report: SolveReport, g: Digraph) -> SolveReport:
    """Re-evaluate the ordering and verify the claimed value."""
    actual = EVALUATORS[report.objective](g, report.ordering)
    if actual != report.value:
        raise AssertionError(
            f"{report.objective} solver reported {report.value} but its "
            f"ordering achieves {actual}")
    return report
