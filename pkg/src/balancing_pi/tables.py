"""Convergence tables: π estimates and correct-digit counts over a grid of term counts."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from .bigreal import BigReal, count_correct_digits, pi_reference
from .errors import DomainError
from .identities import ARITHMETIC_MODES, pi_identity_eval
from .published import PUBLISHED, TERM_COUNTS

TABLE_MIN_PRECISION = 32
DEFAULT_FIGURES = 31

TABLE_TITLES = {
    1: "Squared odd Fibonacci series and the Lucas-balancing series at x = 1",
    2: "Series with even-indexed Lucas coefficients",
    3: "Series with odd-indexed Fibonacci coefficients",
    4: "Series with squared Lucas-balancing coefficients at x = 1",
    5: "Series with squared even-indexed Lucas coefficients",
}

_BOTH_M = (0, 1)
TABLE_COLUMNS: dict[int, list[tuple[str, int]]] = {
    1: [("castellanos-squared", 0), ("lucbal", 0)],
    2: [(i, m) for i in ("theorem2", "theorem3-pi6", "theorem3-pi12", "theorem3-pi5") for m in _BOTH_M],
    3: [(i, m) for i in ("theorem4-pi12", "theorem4-pi6", "theorem4-pi5", "castellanos1") for m in _BOTH_M],
    4: [("lucbal-squared", 0)],
    5: [("lucas-squared", m) for m in _BOTH_M],
}
FORMATS = ("markdown", "csv", "json")
CSV_COLUMNS = ("table_id", "series_label", "m", "n", "value", "digits")


@dataclass(frozen=True)
class TableRow:
    table_id: int
    series_label: str
    m: int
    n: int
    value: str
    digits: int


def render_value(estimate: BigReal, digits: int, figures: int = DEFAULT_FIGURES) -> str:
    """Print ``estimate`` with at least ``figures`` significant digits, more if needed
    for the printed string to still carry ``digits`` correct places."""
    reference = pi_reference(estimate.precision)
    for width in range(figures, estimate.precision + 1):
        text = estimate.to_string(width)
        if count_correct_digits(text, reference) == digits:
            return text
    return estimate.to_string()


def build_table(table_id: int, n_list=TERM_COUNTS, m_list=None, precision: int = 64,
                arithmetic: str = "double", figures: int = DEFAULT_FIGURES) -> list[TableRow]:
    if table_id not in TABLE_COLUMNS:
        raise DomainError(f"table id must be one of {sorted(TABLE_COLUMNS)}")
    if precision < TABLE_MIN_PRECISION:
        raise DomainError(f"tables need precision >= {TABLE_MIN_PRECISION}")
    if arithmetic not in ARITHMETIC_MODES:
        raise DomainError(f"arithmetic must be one of {ARITHMETIC_MODES}")
    rows = []
    for identity_id, m in TABLE_COLUMNS[table_id]:
        if m_list is not None and m not in m_list:
            continue
        for n in n_list:
            report = pi_identity_eval(identity_id, m, n, precision, arithmetic)
            value = render_value(report.pi_estimate, report.digits, figures)
            rows.append(TableRow(table_id, identity_id, m, n, value, report.digits))
    return rows


def published_row(row: TableRow) -> tuple[str, int] | None:
    """The published (value, digits) for the same cell, if that cell was published."""
    key = (row.series_label, row.m)
    if key not in PUBLISHED or row.n not in TERM_COUNTS:
        return None
    return PUBLISHED[key][TERM_COUNTS.index(row.n)]


def matching_places(a: str, b: str) -> int:
    """Number of leading decimal places two value strings share."""
    a_frac, b_frac = a.partition(".")[2], b.partition(".")[2]
    if a.partition(".")[0] != b.partition(".")[0]:
        return 0
    count = 0
    for x, y in zip(a_frac, b_frac):
        if x != y:
            break
        count += 1
    return count


@dataclass(frozen=True)
class CellComparison:
    row: TableRow
    published_value: str
    published_digits: int
    places: int

    @property
    def required_places(self) -> int:
        return min(self.published_digits + 1, 15)

    @property
    def ok(self) -> bool:
        return self.row.digits == self.published_digits and self.places >= self.required_places


def compare_with_published(rows: list[TableRow]) -> list[CellComparison]:
    comparisons = []
    for row in rows:
        published = published_row(row)
        if published is None:
            continue
        value, digits = published
        comparisons.append(CellComparison(row, value, digits, matching_places(row.value, value)))
    return comparisons


# -- rendering -------------------------------------------------------------


def _markdown(rows: list[TableRow]) -> str:
    columns = list(dict.fromkeys((r.series_label, r.m) for r in rows))
    ns = list(dict.fromkeys(r.n for r in rows))
    cells = {(r.series_label, r.m, r.n): r for r in rows}
    lines = []
    for table_id in dict.fromkeys(r.table_id for r in rows):
        lines.append(f"Table {table_id}: {TABLE_TITLES[table_id]}")
        lines.append("")
    header = ["n"] + [f"{label} (m={m})" for label, m in columns]
    lines.append("| " + " | ".join(header) + " |")
    lines.append("|" + "---|" * len(header))
    for n in ns:
        entries = [str(n)]
        for label, m in columns:
            row = cells.get((label, m, n))
            entries.append(f"{row.value} ({row.digits})" if row else "")
        lines.append("| " + " | ".join(entries) + " |")
    return "\n".join(lines) + "\n"


def _csv(rows: list[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([getattr(row, name) for name in CSV_COLUMNS])
    return buffer.getvalue()


def _json(rows: list[TableRow]) -> str:
    return json.dumps([asdict(row) for row in rows], indent=2) + "\n"


def render(rows: list[TableRow], fmt: str = "markdown") -> str:
    if fmt == "markdown":
        return _markdown(rows)
    if fmt == "csv":
        return _csv(rows)
    if fmt == "json":
        return _json(rows)
    raise DomainError(f"format must be one of {FORMATS}")
