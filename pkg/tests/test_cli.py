"""Tests for the command-line interface and its file formats."""

import json

import pytest

from metroent import bounds, cli
from metroent.cli import (
    format_dataset_text,
    grid_csv_text,
    load_dataset,
    main,
    parse_dataset_text,
)
from metroent.witness import Measurement, analyze


def test_bounds_wh_n2(capsys):
    assert main(["bounds", "--n", "2", "--class", "wh"]) == 0
    assert capsys.readouterr().out == "w,h,f\n1,2,2\n2,1,4\n"


def test_bounds_w_table(capsys):
    assert main(["bounds", "--n", "14", "--class", "w"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,f"
    assert "3,40" in lines
    assert lines[-1] == "14,196"


def test_bounds_h_table(capsys):
    assert main(["bounds", "--n", "14", "--class", "h"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "10,34" in lines and "1,196" in lines and "14,14" in lines


def test_bounds_r_table_with_special_cases(capsys):
    assert main(["bounds", "--n", "20", "--class", "r"]) == 0
    lines = capsys.readouterr().out.splitlines()
    # 2*20 - 1 integers minus the two rank gaps, plus the header
    assert len(lines) == 1 + (2 * 20 - 1 - 2)
    assert "-10,44" in lines  # n + r = 10 two-full-row value
    assert "-4,80" in lines  # n + r = 16 two-full-row value
    assert lines[1] == "-19,20"
    assert lines[-1] == "19,400"


def test_bounds_r_simple_quarters(capsys):
    assert main(["bounds", "--n", "14", "--class", "r", "--simple"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "-3,44" in lines
    assert "-4,38.75" in lines
    assert "-10,18" in lines  # n + r = 4 corner overrides the quarter formula
    assert "-12,16.75" not in lines  # rank gap -(n - 2) emits no row


def test_bounds_rejects_bad_n(capsys):
    assert main(["bounds", "--n", "0", "--class", "w"]) == 2


def test_analyze_single_measurement(capsys):
    assert main(["analyze", "--n", "14", "--fq", "40.4"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0].split() == [
        "label", "n", "kind", "value", "w", "h", "r",
        "by_w", "by_h", "by_r", "by_wh", "h_excl",
    ]
    assert lines[1].split() == [
        "fq-n14", "14", "fq", "40.4", "4", "9", "-3", "16", "11", "20", "24", "10",
    ]


def test_analyze_xi2_db(capsys):
    assert main(["analyze", "--n", "470", "--xi2-db", "-4.5"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split()
    assert row == [
        "xi2-n470", "470", "xi2", "-4.5", "dB", "4", "435", "-399",
        "548", "596", "1191", "2941", "436",
    ]


def test_analyze_input_errors(capsys):
    assert main(["analyze", "--n", "14"]) == 2
    assert main(["analyze", "--fq", "40.4"]) == 2
    assert main(["analyze", "--n", "14", "--fq", "40.4", "--xi2", "0.5"]) == 2
    assert main(["analyze", "--dataset", "no-such-file.csv"]) == 2
    assert main(["analyze", "--dataset", "x.csv", "--fq", "1"]) == 2
    assert main(["analyze", "--n", "14", "--fq", "abc"]) == 2


def test_analyze_bundled_dataset(capsys, tmp_path):
    out_dir = tmp_path / "reports"
    assert main(["analyze", "--dataset", "bundled.csv", "--out", str(out_dir)]) == 0
    table = capsys.readouterr().out
    assert "ions-n14" in table and "bec-n470" in table
    for label in ("ions-n8", "ions-n14", "atoms-n36", "ions-n127", "bec-n470"):
        assert (out_dir / label / "report.json").is_file()
        assert (out_dir / label / "grid.csv").is_file()
    report = json.loads((out_dir / "ions-n14" / "report.json").read_text())
    assert report["inferred"] == {"w": 4, "h": 9, "r": -3}
    assert report["counts"] == {"by_w": 16, "by_h": 11, "by_r": 20, "by_wh": 24}
    assert report["q_advantage"] == "26.4"
    grid_lines = (out_dir / "ions-n14" / "grid.csv").read_text().splitlines()
    assert grid_lines[0] == "w,h,f_wh,status"
    assert grid_lines[1] == "1,14,14,WHR"
    assert len(grid_lines) == 1 + 68


def test_analyze_reports_are_deterministic(tmp_path):
    dirs = []
    for name in ("a", "b"):
        out_dir = tmp_path / name
        assert main(["analyze", "--dataset", "bundled.csv", "--out", str(out_dir)]) == 0
        dirs.append(out_dir)
    for label in ("ions-n8", "ions-n14", "atoms-n36", "ions-n127", "bec-n470"):
        for filename in ("report.json", "grid.csv"):
            a = (dirs[0] / label / filename).read_bytes()
            b = (dirs[1] / label / filename).read_bytes()
            assert a == b, (label, filename)


def test_grid_csv_statuses_cover_convention():
    grid = analyze(Measurement(label="m", n=14, kind="fq", value="40.4")).grid
    text = grid_csv_text(grid)
    statuses = {line.rsplit(",", 1)[1] for line in text.splitlines()[1:]}
    assert "OK" in statuses and "WH" in statuses and "WHR" in statuses
    assert statuses <= {"OK", "WH", "W", "H", "R", "WR", "HR", "WHR"}


def test_dataset_round_trip(tmp_path):
    records = load_dataset("bundled.csv")
    assert len(records) == 5
    text = format_dataset_text(records)
    assert parse_dataset_text(text) == records
    path = tmp_path / "copy.csv"
    path.write_text(text)
    assert load_dataset(str(path)) == records


def test_dataset_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_dataset_text("label,n\nx,1\n")
    dup = (
        "label,n,kind,value,unit,reference\n"
        "a,5,fq,6,none,\n"
        "a,6,fq,7,none,\n"
    )
    with pytest.raises(ValueError):
        parse_dataset_text(dup)
    with pytest.raises(ValueError):
        parse_dataset_text("label,n,kind,value,unit,reference\na,x,fq,6,none,\n")
    with pytest.raises(ValueError):
        parse_dataset_text("label,n,kind,value,unit,reference\na,5,fq\n")


def test_rank_summary_bundled(capsys):
    assert main(["rank-summary", "--dataset", "bundled.csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "label,n,r,r_plus_n"
    assert "ions-n14,14,-3,11" in lines
    assert "bec-n470,470,-399,71" in lines


def test_rank_summary_synthetic_extremes(capsys, tmp_path):
    path = tmp_path / "synthetic.csv"
    path.write_text(
        "label,n,kind,value,unit,reference\n"
        "separable,10,fq,10,none,\n"
        "genuine,10,fq,100,none,\n"
    )
    assert main(["rank-summary", "--dataset", str(path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "separable,10,-9,1" in lines
    assert "genuine,10,9,19" in lines


def test_verify_ok(capsys):
    assert main(["verify", "--nmax", "2"]) == 0
    assert main(["verify", "--nmax", "8"]) == 0
    assert capsys.readouterr().out == ""


def test_verify_rejects_nmax_below_two():
    assert main(["verify", "--nmax", "1"]) == 2


def test_verify_detects_corrupted_bound(capsys, monkeypatch):
    monkeypatch.setattr(bounds, "max_qfi_height", lambda n, h: 1)
    assert main(["verify", "--nmax", "5"]) == 1
    out_lines = capsys.readouterr().out.splitlines()
    assert out_lines
    entry = json.loads(out_lines[0])
    assert set(entry) == {"brute", "class", "closed", "n"}


def test_bundled_alias_requires_known_name():
    with pytest.raises(ValueError):
        load_dataset("unknown-alias")
