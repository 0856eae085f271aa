"""Work counters used to observe delay between consecutive outputs."""

from __future__ import annotations


class WorkMeter:
    """Accumulates abstract work units and snapshots them at each emission.

    ``gaps()`` gives the work spent before the first output, between each
    pair of consecutive outputs, and after the last one (once ``finish`` has
    been called).
    """

    def __init__(self) -> None:
        self.work = 0
        self.marks: list[int] = []
        self.final: int | None = None

    def add(self, units: int = 1) -> None:
        self.work += units

    def mark(self) -> None:
        self.marks.append(self.work)

    def finish(self) -> None:
        self.final = self.work

    @property
    def outputs(self) -> int:
        return len(self.marks)

    def gaps(self) -> list[int]:
        points = [0, *self.marks]
        out = [b - a for a, b in zip(points, points[1:])]
        if self.final is not None:
            out.append(self.final - points[-1])
        return out

    def max_gap(self) -> int:
        return max(self.gaps(), default=0)
