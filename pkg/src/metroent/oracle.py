"""Brute-force ground truth for every closed-form sensitivity limit.

The oracle maximizes the squared-row sum over explicitly enumerated
partition classes and never shares code with the closed forms it checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bounds, tuples
from .partitions import YoungDiagram, iter_partition_rows


class EmptyClassError(ValueError):
    """Raised when a predicate admits no partition of the given n."""


@dataclass(frozen=True)
class ClassPredicate:
    """Constraints selecting a partition class; an empty predicate selects all."""

    max_width: int | None = None
    min_height: int | None = None
    max_rank: int | None = None

    def admits(self, rows: tuple[int, ...]) -> bool:
        if self.max_width is not None and rows[0] > self.max_width:
            return False
        if self.min_height is not None and len(rows) < self.min_height:
            return False
        if self.max_rank is not None and rows[0] - len(rows) > self.max_rank:
            return False
        return True


@dataclass(frozen=True)
class BruteForceResult:
    value: int
    argmax: YoungDiagram


@dataclass(frozen=True)
class Mismatch:
    """One disagreement between a closed form and the brute-force maximum."""

    n: int
    label: str
    closed: int
    brute: int

    def as_dict(self) -> dict:
        return {"n": self.n, "class": self.label, "closed": self.closed, "brute": self.brute}


def brute_force_max(n: int, pred: ClassPredicate = ClassPredicate()) -> BruteForceResult:
    """Exhaustively maximize the squared-row sum over the predicate's class.

    Ties are broken by enumeration order (first maximizer in
    reverse-lexicographic order wins), so results are deterministic.
    """
    best = -1
    best_rows = None
    for rows in iter_partition_rows(
        n,
        max_width=pred.max_width,
        min_height=pred.min_height,
        max_rank=pred.max_rank,
    ):
        s = sum(r * r for r in rows)
        if s > best:
            best = s
            best_rows = rows
    if best_rows is None:
        raise EmptyClassError(f"no partition of n={n} satisfies {pred}")
    return BruteForceResult(value=best, argmax=YoungDiagram(best_rows))


def verify_closed_forms(n_max: int) -> list[Mismatch]:
    """Compare every closed form against brute force for all n <= n_max.

    Sweeps every valid (w, h) tuple, every realizable Dyson rank, and every
    marginal width/height class.  Returns the (possibly empty) list of
    mismatches; mismatches are data, not errors.  n_max >= 18 covers both
    two-full-row rank special cases (n + r = 10 and 16) and the n + r = 4
    corner.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    found: list[Mismatch] = []

    def check(n, label, closed, brute):
        if closed != brute:
            found.append(Mismatch(n=n, label=label, closed=closed, brute=brute))

    for n in range(1, n_max + 1):
        for t in tuples.all_tuples(n):
            brute = brute_force_max(n, ClassPredicate(max_width=t.w, min_height=t.h))
            check(n, f"wh({t.w},{t.h})", bounds.max_qfi_wh(n, t.w, t.h), brute.value)
        for w in range(1, n + 1):
            brute = brute_force_max(n, ClassPredicate(max_width=w))
            check(n, f"w({w})", bounds.max_qfi_width(n, w), brute.value)
        for h in range(1, n + 1):
            brute = brute_force_max(n, ClassPredicate(min_height=h))
            check(n, f"h({h})", bounds.max_qfi_height(n, h), brute.value)
        for r in bounds.valid_ranks(n):
            brute = brute_force_max(n, ClassPredicate(max_rank=r))
            check(n, f"r({r})", bounds.max_qfi_rank(n, r), brute.value)
    return found
