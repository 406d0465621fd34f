"""Exact sensitivity limits of separability classes.

For each class of partitions -- bounded width w (producibility), minimum
height h (separability), bounded Dyson rank r, or a (w, h) pair -- these
closed forms give the exact maximum of the quantum Fisher information over
the class, together with simpler non-tight variants.  Everything is integer
or exact-rational arithmetic; no floats enter any computation here, so
exclusion decisions built on these values are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _require_valid_tuple(n: int, w: int, h: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (1 <= w <= n and 1 <= h <= n and _ceil_div(n, w) <= h <= n + 1 - w):
        raise ValueError(
            f"(w={w}, h={h}) is not a realizable width/height pair for n={n}"
        )


@dataclass(frozen=True)
class WhDecomposition:
    """Row structure of the dominant diagram at width w and height h.

    k full rows of width w, one partial row of u boxes (1 <= u <= w) and v
    singleton rows.
    """

    k: int
    u: int
    v: int

    def rows(self, w: int) -> tuple[int, ...]:
        return (w,) * self.k + (self.u,) + (1,) * self.v


@dataclass(frozen=True)
class WidthDecomposition:
    """s full blocks of width w plus one remainder block of t boxes (t < w)."""

    s: int
    t: int


def decompose_wh(n: int, w: int, h: int) -> WhDecomposition:
    """Shape of the square-sum maximizer among diagrams of width w, height h.

    For w == 1 the only diagram is all singletons.  The quotient
    (n - h) // (w - 1) is capped at h - 1: the cap only binds when n == w*h,
    where the maximizer is the full w-by-h rectangle and the uncapped
    quotient would produce a negative singleton count.
    """
    _require_valid_tuple(n, w, h)
    if w == 1:
        return WhDecomposition(k=0, u=1, v=n - 1)
    k = min((n - h) // (w - 1), h - 1)
    u = n - h + 1 - (w - 1) * k
    v = h - k - 1
    return WhDecomposition(k=k, u=u, v=v)


def max_qfi_wh(n: int, w: int, h: int) -> int:
    """Largest quantum Fisher information of any (w, h)-separable state.

    Exact integer; equals the true maximum of the squared-row sum over
    partitions of n with width <= w and height >= h, attained at width
    exactly w and height exactly h.
    """
    d = decompose_wh(n, w, h)
    return d.k * w * w + d.u * d.u + d.v


def max_qfi_wh_simple(n: int, w: int, h: int) -> int:
    """Non-tight (w, h) limit w*(n - h) + n; dominates :func:`max_qfi_wh`."""
    _require_valid_tuple(n, w, h)
    return w * (n - h) + n


def max_qfi_wh_clamped(n: int, w: int, h: int) -> int:
    """Probe helper for (w, h) requests outside the realizable tuple domain.

    Clamps w down to n + 1 - h and h up to ceil(n / w), which is safe by the
    strict monotonicity of the bound in both arguments.  Use this when
    scanning class constraints; invalid tuples passed to :func:`max_qfi_wh`
    itself are errors.
    """
    if n < 1 or not (1 <= w <= n and 1 <= h <= n):
        raise ValueError(f"clamped probe needs 1 <= w, h <= n; got w={w}, h={h}, n={n}")
    w_eff = min(w, n + 1 - h)
    h_eff = max(h, _ceil_div(n, w_eff))
    return max_qfi_wh(n, w_eff, h_eff)


def quantum_advantage(f_measured, n: int):
    """Sensitivity gain over the shot-noise limit: measured value minus n."""
    return f_measured - n


def decompose_width(n: int, w: int) -> WidthDecomposition:
    if not 1 <= w <= n:
        raise ValueError(f"width must satisfy 1 <= w <= n; got w={w}, n={n}")
    s, t = divmod(n, w)
    return WidthDecomposition(s=s, t=t)


def max_qfi_width(n: int, w: int) -> int:
    """Largest QFI of any w-producible state: s*w**2 + t**2 with n = s*w + t."""
    d = decompose_width(n, w)
    return d.s * w * w + d.t * d.t


def max_qfi_width_simple(n: int, w: int) -> int:
    """Non-tight producibility limit w*n; dominates :func:`max_qfi_width`."""
    if not 1 <= w <= n:
        raise ValueError(f"width must satisfy 1 <= w <= n; got w={w}, n={n}")
    return w * n


def max_qfi_height(n: int, h: int) -> int:
    """Largest QFI of any h-separable state: (n + 1 - h)**2 + h - 1."""
    if not 1 <= h <= n:
        raise ValueError(f"height must satisfy 1 <= h <= n; got h={h}, n={n}")
    return (n + 1 - h) ** 2 + h - 1


def valid_ranks(n: int) -> list[int]:
    """All Dyson ranks realizable by partitions of n, in increasing order.

    These are the integers from -(n - 1) to n - 1 with +-(n - 2) removed;
    for n = 1 that is just [0] and for n = 2 it is [-1, 1].
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [r for r in range(-(n - 1), n) if abs(r) != n - 2]


def _require_valid_rank(n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if abs(r) > n - 1 or abs(r) == n - 2:
        raise ValueError(f"r={r} is not a realizable Dyson rank for n={n}")


def max_qfi_rank(n: int, r: int) -> int:
    """Largest QFI of any state with Dyson rank at most r (exact integer).

    The n + r odd and even branches are quadratic in (n + r)/2, except that
    for n + r == 10 (n >= 8) and n + r == 16 (n >= 12) the maximizer has two
    full-width rows instead of one and the value is 34 - r or 76 - r.  The
    even branch self-consistently yields n + 4 at n + r == 4.  Validated
    against brute force by :func:`metroent.oracle.verify_closed_forms`.
    """
    _require_valid_rank(n, r)
    s = n + r
    if s % 2 == 1:
        return (s + 1) ** 2 // 4 + (n - r - 1) // 2
    if s == 10 and n >= 8:
        return 34 - r
    if s == 16 and n >= 12:
        return 76 - r
    return s * s // 4 + (n - r) // 2 + 2


def max_qfi_rank_simple(n: int, r: int) -> Fraction:
    """Non-tight rank limit ((n + r)**2 - 1)/4 + n, with corner n + 4 at n + r == 4.

    Always >= :func:`max_qfi_rank`; coincides with it when n + r is odd.
    """
    _require_valid_rank(n, r)
    if n + r == 4:
        return Fraction(n + 4)
    return Fraction((n + r) ** 2 - 1, 4) + n
