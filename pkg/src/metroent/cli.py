"""Command-line front end: bound tables, measurement analysis, verification.

Subcommands
-----------
bounds        print a class sensitivity-limit table as CSV
analyze       infer w, h, r and excluded-tuple grids from measurements
rank-summary  one (label, n, r, r + n) row per dataset record
verify        check every closed form against brute force, exit 1 on mismatch

Datasets are CSV files with header ``label,n,kind,value,unit,reference``
where kind is ``fq`` or ``xi2`` and unit is ``linear``, ``db`` or ``none``.
All numeric values stay decimal text until they reach the exact-comparison
pipeline; no binary floats are involved in any exclusion decision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib import resources
from pathlib import Path

from . import bounds, oracle, tuples, witness
from .witness import Measurement, TupleGrid, WitnessReport, fraction_to_decimal_text

DATASET_HEADER = ["label", "n", "kind", "value", "unit", "reference"]
_BUNDLED_ALIASES = {"bundled", "bundled.csv", "published", "published.csv"}


def bundled_dataset_text() -> str:
    """The packaged dataset of published QFI / squeezing measurements."""
    return resources.files("metroent").joinpath("data/published.csv").read_text()


def parse_dataset_text(text: str) -> list[Measurement]:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != DATASET_HEADER:
        raise ValueError(
            f"dataset header must be {','.join(DATASET_HEADER)}, got {reader.fieldnames}"
        )
    records = []
    seen = set()
    for row in reader:
        if any(row.get(field) is None for field in DATASET_HEADER):
            raise ValueError(f"dataset row is missing fields: {row}")
        if row["label"] in seen:
            raise ValueError(f"duplicate label {row['label']!r} in dataset")
        seen.add(row["label"])
        try:
            n = int(row["n"])
        except ValueError as exc:
            raise ValueError(f"bad particle count {row['n']!r} for {row['label']!r}") from exc
        records.append(
            Measurement(
                label=row["label"],
                n=n,
                kind=row["kind"],
                value=row["value"],
                unit=row["unit"],
                reference=row["reference"],
            )
        )
    return records


def format_dataset_text(records: list[Measurement]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(DATASET_HEADER)
    for m in records:
        writer.writerow([m.label, m.n, m.kind, m.value, m.unit, m.reference])
    return out.getvalue()


def load_dataset(path_or_alias: str) -> list[Measurement]:
    """Read a dataset file; the name ``bundled.csv`` falls back to the packaged data."""
    path = Path(path_or_alias)
    if path.exists():
        return parse_dataset_text(path.read_text())
    if path_or_alias in _BUNDLED_ALIASES:
        return parse_dataset_text(bundled_dataset_text())
    raise ValueError(f"dataset file not found: {path_or_alias}")


def grid_csv_text(grid: TupleGrid) -> str:
    lines = ["w,h,f_wh,status"]
    lines.extend(f"{c.w},{c.h},{c.f},{c.status()}" for c in grid.cells)
    return "\n".join(lines) + "\n"


def report_json_text(report: WitnessReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2) + "\n"


def write_report(report: WitnessReport, out_dir: str | Path) -> Path:
    """Write ``<label>/report.json`` and ``<label>/grid.csv`` under ``out_dir``."""
    target = Path(out_dir) / report.measurement.label
    target.mkdir(parents=True, exist_ok=True)
    (target / "report.json").write_text(report_json_text(report))
    (target / "grid.csv").write_text(grid_csv_text(report.grid))
    return target


def _format_value(v) -> str:
    if isinstance(v, int):
        return str(v)
    return fraction_to_decimal_text(v)


def _cmd_bounds(args) -> int:
    n = args.n
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    lines = []
    if args.cls == "wh":
        f = bounds.max_qfi_wh_simple if args.simple else bounds.max_qfi_wh
        lines.append("w,h,f")
        lines.extend(
            f"{t.w},{t.h},{_format_value(f(n, t.w, t.h))}" for t in tuples.all_tuples(n)
        )
    elif args.cls == "w":
        f = bounds.max_qfi_width_simple if args.simple else bounds.max_qfi_width
        lines.append("x,f")
        lines.extend(f"{w},{_format_value(f(n, w))}" for w in range(1, n + 1))
    elif args.cls == "h":
        # the height limit has no simpler variant; --simple emits the same table
        lines.append("x,f")
        lines.extend(
            f"{h},{_format_value(bounds.max_qfi_height(n, h))}" for h in range(1, n + 1)
        )
    else:
        f = bounds.max_qfi_rank_simple if args.simple else bounds.max_qfi_rank
        lines.append("x,f")
        lines.extend(f"{r},{_format_value(f(n, r))}" for r in bounds.valid_ranks(n))
    print("\n".join(lines))
    return 0


def _measurements_from_args(args) -> list[Measurement]:
    picked = [
        name
        for name, value in (("--fq", args.fq), ("--xi2", args.xi2), ("--xi2-db", args.xi2_db))
        if value is not None
    ]
    if args.dataset is not None:
        if picked or args.n is not None:
            raise ValueError("--dataset cannot be combined with --n/--fq/--xi2/--xi2-db")
        return load_dataset(args.dataset)
    if args.n is None or len(picked) != 1:
        raise ValueError("need either --dataset or --n with exactly one of --fq/--xi2/--xi2-db")
    if args.fq is not None:
        return [Measurement(label=f"fq-n{args.n}", n=args.n, kind="fq", value=args.fq)]
    if args.xi2 is not None:
        return [
            Measurement(
                label=f"xi2-n{args.n}", n=args.n, kind="xi2", value=args.xi2, unit="linear"
            )
        ]
    return [
        Measurement(label=f"xi2-n{args.n}", n=args.n, kind="xi2", value=args.xi2_db, unit="db")
    ]


def _print_table(header: list[str], rows: list[list[str]]) -> None:
    widths = [max(len(col), *(len(r[i]) for r in rows)) if rows else len(col)
              for i, col in enumerate(header)]
    print("  ".join(col.ljust(w) for col, w in zip(header, widths)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _cmd_analyze(args) -> int:
    measurements = _measurements_from_args(args)
    reports = [witness.analyze(m, simple=args.simple) for m in measurements]
    if args.out is not None:
        for report in reports:
            write_report(report, args.out)
    header = ["label", "n", "kind", "value", "w", "h", "r",
              "by_w", "by_h", "by_r", "by_wh", "h_excl"]
    rows = []
    for rep in reports:
        m = rep.measurement
        value = m.value if m.unit != "db" else f"{m.value} dB"
        rows.append(
            [
                m.label,
                str(m.n),
                m.kind,
                value,
                str(rep.depth),
                str(rep.separability),
                str(rep.rank),
                str(rep.counts["by_w"]),
                str(rep.counts["by_h"]),
                str(rep.counts["by_r"]),
                str(rep.counts["by_wh"]),
                "-" if rep.smallest_excluded_h is None else str(rep.smallest_excluded_h),
            ]
        )
    _print_table(header, rows)
    return 0


def _cmd_rank_summary(args) -> int:
    measurements = load_dataset(args.dataset)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["label", "n", "r", "r_plus_n"])
    for m in measurements:
        r = witness.infer_rank(m)
        writer.writerow([m.label, m.n, r, r + m.n])
    return 0


def _cmd_verify(args) -> int:
    mismatches = oracle.verify_closed_forms(args.nmax)
    if not mismatches:
        print(
            f"verify: closed forms match brute force for all n <= {args.nmax}",
            file=sys.stderr,
        )
        return 0
    for mm in mismatches:
        print(json.dumps(mm.as_dict(), sort_keys=True))
    return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metroent",
        description="Exact metrological bounds and witnesses for multipartite entanglement classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="print a class sensitivity-limit table as CSV")
    p_bounds.add_argument("--n", type=int, required=True, help="particle count")
    p_bounds.add_argument(
        "--class", dest="cls", choices=("w", "h", "r", "wh"), required=True,
        help="class family: producibility, separability, Dyson rank, or full tuples",
    )
    p_bounds.add_argument("--simple", action="store_true", help="use the non-tight bounds")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_analyze = sub.add_parser(
        "analyze", help="infer w, h, r and excluded tuples from measurements"
    )
    p_analyze.add_argument("--n", type=int, help="particle count (with --fq/--xi2/--xi2-db)")
    p_analyze.add_argument("--fq", help="measured QFI lower bound, decimal text")
    p_analyze.add_argument("--xi2", help="measured squeezing upper bound, linear decimal text")
    p_analyze.add_argument("--xi2-db", dest="xi2_db", help="measured squeezing upper bound in dB")
    p_analyze.add_argument(
        "--dataset", help="CSV dataset file ('bundled.csv' uses the packaged data)"
    )
    p_analyze.add_argument("--out", help="directory for <label>/report.json and grid.csv")
    p_analyze.add_argument("--simple", action="store_true", help="use the non-tight bounds")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_rank = sub.add_parser("rank-summary", help="per-record inferred Dyson rank as CSV")
    p_rank.add_argument("--dataset", required=True)
    p_rank.set_defaults(func=_cmd_rank_summary)

    p_verify = sub.add_parser("verify", help="closed forms vs brute force; exit 1 on mismatch")
    p_verify.add_argument("--nmax", type=int, default=30, help="largest n to sweep")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
