"""Difference tables, main diagonals, and degree detection.

Row 0 holds the sequence values; row r+1 holds successive differences of
row r.  The main diagonal is the leftmost entry of each row.  A sequence
generated by a degree-d polynomial on a constant-step grid has a constant
row d, which is how the degree is detected.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotPolynomialError
from .numeric import Rational, binomial


@dataclass(frozen=True)
class DifferenceTable:
    rows: tuple[tuple[Rational, ...], ...]

    @property
    def main_diagonal(self) -> tuple[Rational, ...]:
        return tuple(row[0] for row in self.rows)


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    constant_row_value: Rational
    witnesses: int


def build_table(values) -> DifferenceTable:
    """Build all rows down to the single-entry row."""
    row = tuple(values)
    if not row:
        raise DomainError("sequence must have at least one value")
    rows = [row]
    while len(row) > 1:
        row = tuple(row[c + 1] - row[c] for c in range(len(row) - 1))
        rows.append(row)
    return DifferenceTable(rows=tuple(rows))


def diagonal_direct(values, k: int) -> Rational:
    """k-th main diagonal entry via the closed binomial form.

    D_k = sum_{i=0}^{k} (-1)^(k-i) C(k,i) a_i.  Independent of build_table;
    used to cross-check table construction.
    """
    values = tuple(values)
    if not 0 <= k < len(values):
        raise DomainError(f"diagonal index {k} out of range for length {len(values)}")
    total = Rational(0)
    for i in range(k + 1):
        term = binomial(k, i) * values[i]
        total += term if (k - i) % 2 == 0 else -term
    return total


def detect_degree(table: DifferenceTable, min_witnesses: int = 2) -> DegreeReport:
    """Find the shallowest constant row with at least min_witnesses entries.

    Raises NotPolynomialError (carrying the deepest row inspected) when no
    such row exists within the observed window.
    """
    if min_witnesses < 2:
        raise DomainError("min_witnesses must be >= 2")
    if len(table.rows[0]) < 2:
        raise DomainError("degree detection needs a sequence of length >= 2")
    deepest = -1
    for r, row in enumerate(table.rows):
        if len(row) < min_witnesses:
            break
        deepest = r
        if all(v == row[0] for v in row[1:]):
            return DegreeReport(degree=r, constant_row_value=row[0], witnesses=len(row))
    raise NotPolynomialError(
        f"no constant row with >= {min_witnesses} entries down to row {deepest}; "
        "not polynomial within the observed window",
        deepest_row=deepest,
    )
