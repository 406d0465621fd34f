"""Entanglement inference from one measured sensitivity value.

A measurement is either a lower bound on the quantum Fisher information or
an upper bound on the spin-squeezing coefficient.  Both reduce to a single
exact-rational exclusion threshold: a class with QFI limit f is excluded
exactly when f < threshold.  All comparisons are exact (the measured value
is parsed from its decimal text), so excluded-tuple counts are
bit-reproducible.

A measurement exactly at a class limit does not exclude the class: the
limits are attainable, so exclusion requires strictly exceeding them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bounds, tuples
from .squeezing import db_text_to_linear

KIND_QFI = "fq"
KIND_SQUEEZING = "xi2"
KINDS = (KIND_QFI, KIND_SQUEEZING)
UNITS = ("none", "linear", "db")


@dataclass(frozen=True)
class Measurement:
    """One published sensitivity value for an n-particle state.

    ``value`` is kept as the original decimal text and parsed exactly;
    squeezing values carry an explicit unit (``linear`` or ``db``), QFI
    values carry ``none``.
    """

    label: str
    n: int
    kind: str
    value: str
    unit: str = "none"
    reference: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.unit not in UNITS:
            raise ValueError(f"unit must be one of {UNITS}, got {self.unit!r}")
        if self.kind == KIND_QFI and self.unit != "none":
            raise ValueError("QFI measurements take unit 'none'")
        if self.kind == KIND_SQUEEZING and self.unit == "none":
            raise ValueError("squeezing measurements need unit 'linear' or 'db'")
        q = self.quantity()
        if self.kind == KIND_QFI and q <= 0:
            raise ValueError(f"QFI value must be positive, got {self.value}")
        if self.kind == KIND_SQUEEZING and q <= 0:
            raise ValueError(f"linear xi**2 must be positive, got {self.value}")

    def quantity(self) -> Fraction:
        """The measured quantity on linear scale, as an exact rational."""
        try:
            if self.kind == KIND_SQUEEZING and self.unit == "db":
                return db_text_to_linear(self.value)
            return Fraction(self.value)
        except (ValueError, ArithmeticError) as exc:
            raise ValueError(f"bad decimal value {self.value!r}") from exc

    def exclusion_threshold(self) -> Fraction:
        """The rational T such that a class with QFI limit f is excluded iff f < T.

        For a QFI lower bound F this is F itself.  A squeezing upper bound
        xi**2 excludes a class when xi**2 < 2n/(f + 2n), which rearranges to
        f < 2n(1 - xi**2)/xi**2.
        """
        q = self.quantity()
        if self.kind == KIND_QFI:
            return q
        return 2 * self.n * (1 - q) / q


def exceeds(measurement: Measurement, bound_f) -> bool:
    """True when the measurement strictly beats the class limit ``bound_f``."""
    return bound_f < measurement.exclusion_threshold()


def _width_bound(simple: bool):
    return bounds.max_qfi_width_simple if simple else bounds.max_qfi_width


def _rank_bound(simple: bool):
    return bounds.max_qfi_rank_simple if simple else bounds.max_qfi_rank


def _wh_bound(simple: bool):
    return bounds.max_qfi_wh_simple if simple else bounds.max_qfi_wh


def infer_depth(m: Measurement, *, simple: bool = False) -> int:
    """Smallest producibility w compatible with the measurement.

    Returns n + 1 when even the genuine n-partite limit n**2 is exceeded
    (an unphysical measurement; no separable description remains).
    """
    f = _width_bound(simple)
    return next(
        (w for w in range(1, m.n + 1) if not exceeds(m, f(m.n, w))),
        m.n + 1,
    )


def infer_separability(m: Measurement, *, simple: bool = False) -> int:
    """Largest number of separable groups h compatible with the measurement.

    Returns 0 when no h is compatible.  There is no simpler variant of the
    height limit, so ``simple`` is accepted for symmetry and ignored.
    """
    del simple
    return next(
        (h for h in range(m.n, 0, -1) if not exceeds(m, bounds.max_qfi_height(m.n, h))),
        0,
    )


def infer_rank(m: Measurement, *, simple: bool = False) -> int:
    """Smallest Dyson rank compatible with the measurement.

    Returns n (one past the largest realizable rank) when nothing is
    compatible.
    """
    f = _rank_bound(simple)
    return next(
        (r for r in bounds.valid_ranks(m.n) if not exceeds(m, f(m.n, r))),
        m.n,
    )


@dataclass(frozen=True)
class GridCell:
    """One (w, h) tuple with its QFI limit and per-criterion exclusion flags."""

    w: int
    h: int
    f: int
    excluded_w: bool
    excluded_h: bool
    excluded_r: bool
    excluded_wh: bool

    def status(self) -> str:
        """Flag-set string for CSV export.

        Violated projections are concatenated in the order W, H, R; a tuple
        caught only by the full (w, h) information reads WH, and a
        compatible tuple reads OK.  (W and H together force R, so the
        two-letter value WH is unambiguous.)
        """
        flags = (
            ("W" if self.excluded_w else "")
            + ("H" if self.excluded_h else "")
            + ("R" if self.excluded_r else "")
        )
        if flags:
            return flags
        return "WH" if self.excluded_wh else "OK"


@dataclass(frozen=True)
class TupleGrid:
    """Per-tuple exclusion map for one measurement, ordered by (w, h)."""

    n: int
    cells: tuple[GridCell, ...]

    def counts(self) -> dict[str, int]:
        return {
            "by_w": sum(c.excluded_w for c in self.cells),
            "by_h": sum(c.excluded_h for c in self.cells),
            "by_r": sum(c.excluded_r for c in self.cells),
            "by_wh": sum(c.excluded_wh for c in self.cells),
        }


def rank_bound_at_or_above(n: int, r: int, *, simple: bool = False):
    """Rank limit at the smallest realizable rank >= r.

    Every valid tuple carries a realizable rank, so snapping only matters
    for probes at the +-(n - 2) gaps; it is safe because the rank classes
    are nested (rank <= r is contained in rank <= r + 1).
    """
    if abs(r) == n - 2:
        r += 1
    return _rank_bound(simple)(n, r)


def build_grid(m: Measurement, *, simple: bool = False) -> TupleGrid:
    """Evaluate all four exclusion criteria on every valid tuple.

    The cell's f value is the (w, h) limit the decision used: the tight one
    by default, the simplified one under ``simple``.
    """
    n = m.n
    threshold = m.exclusion_threshold()
    f_w = _width_bound(simple)
    f_r = _rank_bound(simple)
    f_wh = _wh_bound(simple)
    width_excluded = {w: f_w(n, w) < threshold for w in range(1, n + 1)}
    height_excluded = {h: bounds.max_qfi_height(n, h) < threshold for h in range(1, n + 1)}
    rank_excluded = {r: f_r(n, r) < threshold for r in bounds.valid_ranks(n)}
    cells = []
    for t in tuples.all_tuples(n):
        f_val = f_wh(n, t.w, t.h)
        cells.append(
            GridCell(
                w=t.w,
                h=t.h,
                f=f_val,
                excluded_w=width_excluded[t.w],
                excluded_h=height_excluded[t.h],
                excluded_r=rank_excluded[t.w - t.h],
                excluded_wh=f_val < threshold,
            )
        )
    return TupleGrid(n=n, cells=tuple(cells))


@dataclass(frozen=True)
class WitnessReport:
    """Everything inferred from one measurement."""

    measurement: Measurement
    depth: int
    separability: int
    rank: int
    counts: dict
    grid: TupleGrid
    q_advantage: "Fraction | None"

    @property
    def smallest_excluded_h(self) -> "int | None":
        """The smallest excluded group count, one above the compatible maximum."""
        nxt = self.separability + 1
        return nxt if nxt <= self.measurement.n else None

    def to_json_dict(self) -> dict:
        m = self.measurement
        return {
            "label": m.label,
            "n": m.n,
            "kind": m.kind,
            "value": m.value,
            "inferred": {"w": self.depth, "h": self.separability, "r": self.rank},
            "counts": dict(self.counts),
            "q_advantage": None
            if self.q_advantage is None
            else fraction_to_decimal_text(self.q_advantage),
            "grid_ref": "grid.csv",
        }


def analyze(m: Measurement, *, simple: bool = False) -> WitnessReport:
    """Full inference for one measurement: w, h, r, grid, counts, advantage."""
    grid = build_grid(m, simple=simple)
    q = bounds.quantum_advantage(m.quantity(), m.n) if m.kind == KIND_QFI else None
    return WitnessReport(
        measurement=m,
        depth=infer_depth(m, simple=simple),
        separability=infer_separability(m, simple=simple),
        rank=infer_rank(m, simple=simple),
        counts=grid.counts(),
        grid=grid,
        q_advantage=q,
    )


def fraction_to_decimal_text(value: Fraction) -> str:
    """Exact decimal text of a rational whose denominator divides a power of ten."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{value} has no terminating decimal form")
    scale = max(twos, fives)
    scaled = abs(value.numerator) * 10**scale // value.denominator
    digits = str(scaled).rjust(scale + 1, "0")
    text = digits if scale == 0 else f"{digits[:-scale]}.{digits[-scale:]}"
    return f"-{text}" if value < 0 else text
