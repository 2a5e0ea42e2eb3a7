import json
from fractions import Fraction

import pytest

from trifrac.decompose import Instance, Triple, formula_one_at, formula_two_at, verify_decomposition
from trifrac.report import (
    TABLE_IDS,
    TableRow,
    emit,
    load_fixture,
    parse_rows_csv,
    regress_fixture,
    render_row,
    round_half_up,
)
from trifrac.scan import ScanConfig

EXPECTED_ROW_COUNTS = {
    "T1": 50, "T2": 49, "T3": 50, "T4": 50, "T5": 50,
    "T6": 46, "T7": 31, "T8": 42, "T9": 22, "T10": 47,
}


def test_round_half_up():
    assert round_half_up(Fraction(4, 3), 4) == "1.3333"
    assert round_half_up(Fraction(2), 1) == "2.0"
    assert round_half_up(Fraction(1, 2), 1) == "0.5"
    assert round_half_up(Fraction(5, 1000), 2) == "0.01"  # tie rounds up
    assert round_half_up(Fraction(11, 501), 10) == "0.0219560878"
    with pytest.raises(ValueError):
        round_half_up(Fraction(1), 0)


def test_render_row_examples():
    inst = Instance(4, 3)
    row = render_row(inst, formula_one_at(inst, 2), places=4)
    assert (row.L, row.R, row.holds) == ("1.3333", "1.3333", True)
    assert row.t is None  # divisibility route carries no t witness

    inst = Instance(11, 501)
    row = render_row(inst, formula_one_at(inst, 46), places=10)
    assert row.L == "0.0219560878"

    inst = Instance(4, 2)
    row = render_row(inst, formula_two_at(inst, 1, 1), places=1)
    assert (row.L, row.R) == ("2.0", "2.0")
    assert (row.x, row.y, row.z, row.t) == (1, 2, 2, 1)


def test_render_row_holds_is_exact_not_display():
    # rounded displays can collide; holds must come from the exact sums
    inst = Instance(4, 3000001)
    verdict = verify_decomposition(Instance(4, 3000000), Triple(1500000, 3000000, 3000000))
    assert verdict.holds
    near = verify_decomposition(inst, Triple(1500000, 3000000, 3000000))
    assert not near.holds
    assert round_half_up(near.lhs, 4) == round_half_up(near.rhs, 4)


ROW = TableRow(n=2, x=1, y=2, z=2, t=1, L="2.0", R="2.0", holds=True)


def test_emit_csv_example():
    text = emit([ROW], "csv")
    assert text == "n,x,y,z,t,L,R,holds\n2,1,2,2,1,2.0,2.0,true\n"


def test_emit_empty():
    assert emit([], "csv") == "n,x,y,z,t,L,R,holds\n"
    assert emit([], "json") == "[]"
    assert emit([], "markdown").startswith("| n | x | y | z | t | L | R | holds |")


def test_emit_json_matches_fixture_row():
    table6 = load_fixture("T6")
    first = table6.rows[0]
    objs = json.loads(emit([first], "json"))
    assert objs[0]["n"] == 3 and objs[0]["x"] == 1
    assert objs[0]["y"] == 2 and objs[0]["z"] == 6
    assert objs[0]["t"] is None and objs[0]["holds"] is True


def test_emit_markdown_shape():
    text = emit([ROW], "markdown")
    lines = text.splitlines()
    assert lines[0] == "| n | x | y | z | t | L | R | holds |"
    assert lines[2] == "| 2 | 1 | 2 | 2 | 1 | 2.0 | 2.0 | true |"


def test_emit_rejects_unknown_format():
    with pytest.raises(ValueError):
        emit([ROW], "xml")


def test_csv_round_trip():
    rows = [
        ROW,
        TableRow(n=17, x=5, y=34, z=170, t=None, L="0.2353", R="0.2353", holds=True),
        TableRow(n=3, x=1, y=1, z=1, t=7, L="3.0000", R="3.0000", holds=False),
    ]
    assert parse_rows_csv(emit(rows, "csv")) == rows


def test_fixture_row_counts():
    for tid, count in EXPECTED_ROW_COUNTS.items():
        assert len(load_fixture(tid).rows) == count


def test_fixture_rows_all_verify_exactly():
    for tid in TABLE_IDS:
        fixture = load_fixture(tid)
        for row in fixture.rows:
            verdict = verify_decomposition(Instance(fixture.a, row.n), Triple(row.x, row.y, row.z))
            assert verdict.holds, (tid, row.n)
            assert row.holds


def test_load_fixture_unknown_id():
    with pytest.raises(ValueError):
        load_fixture("T11")
    with pytest.raises(ValueError):
        regress_fixture("bogus")


def test_regress_fixture_t1():
    result = regress_fixture("T1")
    assert result.ok and result.matched == 50
    assert len(result.rescanned) == 50


def test_regress_fixture_t2_includes_n41():
    result = regress_fixture("T2")
    assert result.ok
    row41 = next(r for r in result.rescanned if r.n == 41)
    assert (row41.x, {row41.y, row41.z}) == (12, {82, 492})


def test_regress_fixture_t9_row_n53():
    result = regress_fixture("T9")
    assert result.ok
    row = next(r for r in result.rescanned if r.n == 53)
    assert (row.x, {row.y, row.z}) == (8, {40, 1060})


def test_regress_fixture_reports_mismatches():
    # starving the search bounds must produce reported mismatches, not silence
    result = regress_fixture("T2", ScanConfig(x_ceiling_factor=1, t_window=2))
    assert not result.ok
    miss = result.mismatched[0]
    assert miss.expected is not None
    assert result.matched + len(result.mismatched) == EXPECTED_ROW_COUNTS["T2"]
