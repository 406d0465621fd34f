"""Young diagrams (integer partitions) with constrained streaming enumeration.

A diagram is a non-increasing tuple of positive row sizes.  Its width is the
largest row (size of the biggest entangled block), its height the number of
rows (number of separable blocks), and its Dyson rank the difference of the
two.  Enumeration is reverse-lexicographic on the row tuples so that reports
and tests are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class YoungDiagram:
    """An integer partition, stored as non-increasing positive row sizes."""

    rows: tuple[int, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a diagram needs at least one row")
        if any(r < 1 for r in self.rows):
            raise ValueError(f"row sizes must be positive: {self.rows}")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise ValueError(f"rows must be non-increasing: {self.rows}")

    @classmethod
    def from_rows(cls, rows) -> "YoungDiagram":
        return cls(tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> "YoungDiagram":
        """Parse the comma-joined text form, e.g. ``"4,2,1"``."""
        try:
            rows = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad diagram text {text!r}") from exc
        return cls(rows)

    @property
    def n(self) -> int:
        """Total number of boxes (particles)."""
        return sum(self.rows)

    def width(self) -> int:
        return self.rows[0]

    def height(self) -> int:
        return len(self.rows)

    def dyson_rank(self) -> int:
        return self.rows[0] - len(self.rows)

    def sum_squares(self) -> int:
        """Sum of squared row sizes; each block of size m can contribute m**2."""
        return sum(r * r for r in self.rows)

    def __str__(self) -> str:
        # bit-exact CLI/report text form: no spaces, non-increasing order
        return ",".join(str(r) for r in self.rows)


def iter_partition_rows(
    n: int,
    *,
    max_width: int | None = None,
    min_height: int | None = None,
    max_rank: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Stream raw row tuples of every partition of ``n`` meeting the constraints.

    Low-overhead variant of :func:`enumerate_diagrams` for bulk scans; yields
    plain tuples in reverse-lexicographic order.  Constraints prune the
    generation tree instead of filtering afterwards.  Unsatisfiable
    constraints produce an empty stream, not an error.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    width_cap = n if max_width is None else min(max_width, n)
    height_floor = 1 if min_height is None else max(min_height, 1)
    if width_cap < 1 or height_floor > n:
        return
    for first in range(width_cap, 0, -1):
        # a first part of `first` fixes the width, so a rank cap turns into
        # the extra height requirement height >= first - max_rank
        need = height_floor if max_rank is None else max(height_floor, first - max_rank)
        yield from _descending_rows(n - first, first, need - 1, (first,))


def _descending_rows(remaining, bound, rows_needed, prefix):
    if remaining == 0:
        if rows_needed <= 0:
            yield prefix
        return
    top = min(remaining, bound)
    if rows_needed > 1:
        # every future row takes at least one box
        top = min(top, remaining - (rows_needed - 1))
    for part in range(top, 0, -1):
        yield from _descending_rows(remaining - part, part, rows_needed - 1, prefix + (part,))


def enumerate_diagrams(
    n: int,
    *,
    max_width: int | None = None,
    min_height: int | None = None,
    max_rank: int | None = None,
) -> Iterator[YoungDiagram]:
    """Yield every partition of ``n`` satisfying the constraints, exactly once.

    Order is reverse-lexicographic on the row tuples.  The iterator is
    single-consumer; the yielded diagrams are immutable and freely shareable.
    """
    for rows in iter_partition_rows(
        n, max_width=max_width, min_height=min_height, max_rank=max_rank
    ):
        yield YoungDiagram(rows)
