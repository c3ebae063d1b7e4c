import io
import json
import math
from pathlib import Path

import pytest

from artifact import SolarModel, TableFormatError, make_qi_table, parse_qi_table, write_qi_table
from artifact.tableio import fmt

DATA = Path(__file__).parent / "data"


def test_happy_path_csv():
    t = parse_qi_table(DATA / "ping_a2.csv")
    assert len(t.intervals) == 24
    assert t.year_length == pytest.approx(math.fsum(t.lengths), abs=0)
    assert t.year_length == pytest.approx(365.25, abs=1e-9)


def test_json_matches_csv():
    a = parse_qi_table(DATA / "ping_a2.csv")
    b = parse_qi_table(DATA / "ping_a2.json", format="json")
    assert a.intervals == b.intervals


@pytest.mark.parametrize("fmt_name", ["csv", "json"])
def test_round_trip(fmt_name):
    table = make_qi_table(SolarModel(amplitude=2.0), "ding")
    buf = io.StringIO()
    write_qi_table(table, buf, fmt_name)
    back = parse_qi_table(io.StringIO(buf.getvalue()), fmt_name)
    # 12 significant digits: at most half a unit in the 12th digit
    for x, y in zip(table.intervals, back.intervals):
        assert x.index == y.index
        assert abs(y.n - x.n) <= 5e-12 * abs(x.n)
        assert abs(y.delta - x.delta) <= 5e-12 * abs(x.delta)
    again = io.StringIO()
    write_qi_table(back, again, fmt_name)
    assert again.getvalue() == buf.getvalue()


@pytest.mark.parametrize(
    "name, row, needle",
    [
        ("short.csv", None, "expected 24"),
        ("zero_length.csv", 7, "invalid length"),
        ("bad_index.csv", 9, "expected 9"),
        ("nonnumeric.csv", 3, "non-numeric"),
    ],
)
def test_malformed_files(name, row, needle):
    with pytest.raises(TableFormatError, match=needle) as info:
        parse_qi_table(DATA / name)
    assert info.value.row == row
    if row is not None:
        assert f"row {row}" in str(info.value)


def test_unclosed_table_warns(caplog):
    t = parse_qi_table(DATA / "unclosed.csv")
    assert t.closure_residual == pytest.approx(0.5, abs=1e-11)
    assert "deviations sum" in caplog.text


@pytest.mark.parametrize(
    "text, needle",
    [
        ("", "header"),
        ("index,n,delta\n", "header must be"),
        ("qi_index,n_days,delta_du\n1,2\n", "expected 3 fields"),
    ],
)
def test_csv_structure(text, needle):
    with pytest.raises(TableFormatError, match=needle):
        parse_qi_table(io.StringIO(text))


def test_json_structure():
    with pytest.raises(TableFormatError, match="array"):
        parse_qi_table(io.StringIO('{"qi_index": 1}'), "json")
    rows = [{"qi_index": i, "n_days": 15.0, "delta_du": 0.0} for i in range(1, 25)]
    rows[4] = {"qi_index": 5, "n_days": 15.0}
    with pytest.raises(TableFormatError, match="row 5"):
        parse_qi_table(io.StringIO(json.dumps(rows)), "json")
    with pytest.raises(TableFormatError, match="invalid JSON"):
        parse_qi_table(io.StringIO("[1,"), "json")


@pytest.mark.parametrize("v, text", [(1255.0, "1255"), (-0.0, "0"), (1 / 3, "0.333333333333"), (7, "7"), (1e-20, "1e-20")])
def test_fmt(v, text):
    assert fmt(v) == text
