"""Table rendering, fixture regression, and machine-readable exports.

The shipped fixture files transcribe the published result tables; the
regression here re-runs the corresponding scan for every fixture row and
compares first hits. Row truth (does the decomposition hold) is always
decided on exact rationals; the L/R columns are display-only roundings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .decompose import Certificate, Instance, verify_decomposition
from .scan import ScanConfig, formula_one_scan, formula_two_scan

__all__ = [
    "TableRow",
    "FixtureTable",
    "Mismatch",
    "RegressionResult",
    "TABLE_IDS",
    "round_half_up",
    "render_row",
    "emit",
    "parse_rows_csv",
    "load_fixture",
    "regress_fixture",
]

CSV_HEADER = ["n", "x", "y", "z", "t", "L", "R", "holds"]


@dataclass(frozen=True)
class TableRow:
    """One display row: the decomposition, the optional parameter t, and
    rounded left/right column strings."""

    n: int
    x: int
    y: int
    z: int
    t: int | None
    L: str
    R: str
    holds: bool


def round_half_up(value: Fraction, places: int) -> str:
    """Fixed-point decimal string with `places` digits, ties away from
    zero, computed without floats."""
    if places < 1:
        raise ValueError("places must be >= 1")
    if value < 0:
        raise ValueError("only non-negative values are rendered")
    scaled = value * 10**places
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    digits = str(q).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def render_row(inst: Instance, cert: Certificate, places: int = 4) -> TableRow:
    """Render a certificate as a table row; holds is decided exactly, not
    from the rounded strings."""
    verdict = verify_decomposition(inst, cert.triple)
    return TableRow(
        n=inst.n,
        x=cert.triple.x,
        y=cert.triple.y,
        z=cert.triple.z,
        t=cert.witness_t,
        L=round_half_up(verdict.lhs, places),
        R=round_half_up(verdict.rhs, places),
        holds=verdict.holds,
    )


def emit(rows: list[TableRow], format: str) -> str:
    """Serialize rows as csv, json, or markdown (in input order)."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in rows:
            writer.writerow(
                [r.n, r.x, r.y, r.z, "" if r.t is None else r.t, r.L, r.R, str(r.holds).lower()]
            )
        return buf.getvalue()
    if format == "json":
        return json.dumps(
            [
                {"n": r.n, "x": r.x, "y": r.y, "z": r.z, "t": r.t, "L": r.L, "R": r.R, "holds": r.holds}
                for r in rows
            ],
            indent=2,
        )
    if format == "markdown":
        lines = ["| " + " | ".join(CSV_HEADER) + " |", "|" + " --- |" * len(CSV_HEADER)]
        for r in rows:
            cells = [r.n, r.x, r.y, r.z, "" if r.t is None else r.t, r.L, r.R, str(r.holds).lower()]
            lines.append("| " + " | ".join(str(c) for c in cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; choose csv, json, or markdown")


def parse_rows_csv(text: str) -> list[TableRow]:
    """Inverse of emit(..., "csv"). Lines starting with '#' are comments,
    which is how fixture files carry their provenance."""
    lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    reader = csv.DictReader(lines)
    rows = []
    for rec in reader:
        rows.append(
            TableRow(
                n=int(rec["n"]),
                x=int(rec["x"]),
                y=int(rec["y"]),
                z=int(rec["z"]),
                t=int(rec["t"]) if rec["t"] else None,
                L=rec["L"],
                R=rec["R"],
                holds=rec["holds"] == "true",
            )
        )
    return rows


@dataclass(frozen=True)
class FixtureTable:
    """A transcribed published table: its numerator, which formula built
    it, and the printed rows."""

    table_id: str
    a: int
    formula: str  # "one" | "two"
    rows: tuple[TableRow, ...]


# table id -> (fixture file, numerator a, formula route)
_FIXTURES = {
    "T1": ("table01.csv", 4, "one"),
    "T2": ("table02.csv", 4, "two"),
    "T3": ("table03.csv", 4, "two"),
    "T4": ("table04.csv", 4, "two"),
    "T5": ("table05.csv", 4, "two"),
    "T6": ("table06.csv", 5, "two"),
    "T7": ("table07.csv", 5, "two"),
    "T8": ("table08.csv", 8, "two"),
    "T9": ("table09.csv", 8, "two"),
    "T10": ("table10.csv", 11, "one"),
}

TABLE_IDS = tuple(_FIXTURES)


def load_fixture(table_id: str) -> FixtureTable:
    try:
        filename, a, formula = _FIXTURES[table_id]
    except KeyError:
        raise ValueError(f"unknown fixture {table_id!r}; choose from {', '.join(TABLE_IDS)}") from None
    text = (resources.files("trifrac") / "fixtures" / filename).read_text(encoding="utf-8")
    return FixtureTable(table_id=table_id, a=a, formula=formula, rows=tuple(parse_rows_csv(text)))


@dataclass(frozen=True)
class Mismatch:
    """A fixture row the rescan failed to reproduce; tuples are
    (x, {y, z}) plus t when the fixture records one."""

    n: int
    expected: tuple
    actual: tuple | None


@dataclass
class RegressionResult:
    table_id: str
    matched: int
    mismatched: list[Mismatch]
    rescanned: list[TableRow]

    @property
    def ok(self) -> bool:
        return not self.mismatched


def _row_key(x: int, y: int, z: int, t: int | None):
    pair = (y, z) if y <= z else (z, y)
    return (x, pair) if t is None else (x, pair, t)


def regress_fixture(table_id: str, cfg: ScanConfig | None = None) -> RegressionResult:
    """Re-run the scan behind a fixture table for each of its rows and
    compare (x, {y, z}) -- and t where the fixture has it -- exactly."""
    fixture = load_fixture(table_id)
    cfg = cfg or ScanConfig.preset("paper-tables")
    scan = formula_one_scan if fixture.formula == "one" else formula_two_scan
    places = 10 if fixture.table_id == "T10" else 4

    result = RegressionResult(table_id=table_id, matched=0, mismatched=[], rescanned=[])
    for row in fixture.rows:
        inst = Instance(fixture.a, row.n)
        cert = scan(inst, cfg)
        expected = _row_key(row.x, row.y, row.z, row.t)
        if cert is None:
            result.mismatched.append(Mismatch(row.n, expected, None))
            continue
        t = cert.witness_t if row.t is not None else None
        actual = _row_key(cert.triple.x, cert.triple.y, cert.triple.z, t)
        if actual == expected:
            result.matched += 1
        else:
            result.mismatched.append(Mismatch(row.n, expected, actual))
        result.rescanned.append(render_row(inst, cert, places))
    return result
