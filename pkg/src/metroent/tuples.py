"""The (w, h) tuple domain for a fixed particle number, with class counting.

A tuple (w, h) is valid for n when some partition of n has width exactly w
and height exactly h, i.e. ceil(n/w) <= h <= n + 1 - w.  Counting functions
use exact integer arithmetic only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import bounds


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class TupleClass:
    """A realizable width/height pair for n particles."""

    n: int
    w: int
    h: int

    def __post_init__(self):
        if not is_valid(self.n, self.w, self.h):
            raise ValueError(f"(w={self.w}, h={self.h}) is not realizable for n={self.n}")

    @property
    def rank(self) -> int:
        return self.w - self.h


def is_valid(n: int, w: int, h: int) -> bool:
    """True iff a partition of n with width exactly w and height exactly h exists."""
    if n < 1 or w < 1 or h < 1:
        raise ValueError(f"n, w, h must be >= 1; got n={n}, w={w}, h={h}")
    return w <= n and h <= n and _ceil_div(n, w) <= h <= n + 1 - w


def all_tuples(n: int) -> list[TupleClass]:
    """Every valid tuple for n, ordered by (w ascending, h ascending)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [
        TupleClass(n, w, h)
        for w in range(1, n + 1)
        for h in range(_ceil_div(n, w), n + 2 - w)
    ]


def count_width_leq(n: int, w: int) -> int:
    """Number of valid tuples with width at most w.

    For each width there are n + 2 - w_i - ceil(n / w_i) admissible heights.
    """
    if not 1 <= w <= n:
        raise ValueError(f"width must satisfy 1 <= w <= n; got w={w}, n={n}")
    return sum(n + 2 - wi - _ceil_div(n, wi) for wi in range(1, w + 1))


def count_height_geq(n: int, h: int) -> int:
    """Number of valid tuples with height at least h."""
    if not 1 <= h <= n:
        raise ValueError(f"height must satisfy 1 <= h <= n; got h={h}, n={n}")
    return sum(n + 2 - hi - _ceil_div(n, hi) for hi in range(h, n + 1))


def count_rank_leq(n: int, r: int) -> int:
    """Number of valid tuples with Dyson rank w - h at most r.

    Counts by direct enumeration over :func:`all_tuples`; the closed form
    :func:`count_rank_leq_closed` is kept as an in-range cross-check only.
    """
    bounds._require_valid_rank(n, r)
    return sum(1 for t in all_tuples(n) if t.w - t.h <= r)


def count_rank_leq_closed(n: int, r: int) -> int:
    """Closed-form tuple count for rank <= r, valid for 3 - n <= r <= n - 3.

    For fixed rank r_i the admissible widths are
    ceil((sqrt(r_i**2 + 4n) + r_i)/2) <= w <= floor((n + 1 + r_i)/2); the
    ceiling is evaluated with integer square roots so the result is exact.
    """
    bounds._require_valid_rank(n, r)
    if not 3 - n <= r <= n - 3:
        raise ValueError(f"closed form only covers 3 - n <= r <= n - 3; got r={r}, n={n}")
    total = n + r - 1
    for ri in range(3 - n, r + 1):
        hi = (n + 1 + ri) // 2
        disc = ri * ri + 4 * n
        s = math.isqrt(disc)
        if s * s == disc:
            lo = -(-(s + ri) // 2)
        else:
            # sqrt(disc) is irrational and lies in (s, s + 1)
            lo = (s + ri) // 2 + 1
        total += hi - lo
    return total
