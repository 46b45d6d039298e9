"""Worpitzky number triangles and Stirling numbers of the second kind.

Two triangles are served:

* MWNT, the Mirrored Worpitzky Number Triangle (OEIS A028246), with entries
  (k-1)! * S(n,k), computed as (1/k) * sum_{i=0}^{k} (-1)^(k-i) C(k,i) i^n.
* AWNT, the Alternative Worpitzky Triangle (OEIS A019538), with entries
  k! * S(n,k), computed as sum_{i=0}^{k} (-1)^(k-i) C(k,i) i^n.

Indexing is 1-based (n, k) matching the printed tables; entries with n < k
are 0 and are not stored.  The signed binomial-power sum is the definition;
the Stirling recurrence is kept as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial

from .errors import DomainError, InternalConsistencyError
from .numeric import binomial


class TriangleKind(Enum):
    MWNT = "mwnt"
    AWNT = "awnt"
    STIRLING2 = "stirling2"


def _signed_power_sum(n: int, k: int) -> int:
    # sum_{i=0}^{k} (-1)^(k-i) C(k,i) i^n with 0^n = 0 for n >= 1
    total = 0
    for i in range(k + 1):
        term = binomial(k, i) * i**n
        total += term if (k - i) % 2 == 0 else -term
    return total


def awnt(n: int, k: int) -> int:
    """AWNT(n, k) = k! * S(n, k); 0 for n < k."""
    if n < 1 or k < 1:
        raise DomainError(f"awnt defined for n >= 1, k >= 1, got ({n}, {k})")
    if n < k:
        return 0
    return _signed_power_sum(n, k)


def mwnt(n: int, k: int) -> int:
    """MWNT(n, k) = (k-1)! * S(n, k); 0 for n < k."""
    if n < 1 or k < 1:
        raise DomainError(f"mwnt defined for n >= 1, k >= 1, got ({n}, {k})")
    if n < k:
        return 0
    total = _signed_power_sum(n, k)
    if total % k != 0:
        raise InternalConsistencyError(
            f"signed power sum {total} not divisible by k={k} at n={n}"
        )
    return total // k


def stirling2(n: int, k: int) -> int:
    """S(n, k) via the recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1)."""
    if n < 0 or k < 0:
        raise DomainError("stirling2 requires nonnegative arguments")
    if k > n:
        return 0
    # row-by-row over k = 0..k, constant memory
    row = [1] + [0] * k
    for m in range(1, n + 1):
        prev = row[:]
        row[0] = 0
        for j in range(1, min(m, k) + 1):
            row[j] = j * prev[j] + prev[j - 1]
    return row[k]


@dataclass(frozen=True)
class Triangle:
    """Materialized triangular table; rows[n-1] holds entries for k = 1..n."""

    kind: TriangleKind
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        """Entry at (n, k); 0 for n < k; recomputes beyond the stored range."""
        if n < k:
            return 0
        if n <= self.max_n:
            return self.rows[n - 1][k - 1]
        return _CELL_FN[self.kind](n, k)


_CELL_FN = {
    TriangleKind.MWNT: mwnt,
    TriangleKind.AWNT: awnt,
    TriangleKind.STIRLING2: stirling2,
}


def build_triangle(kind: TriangleKind, max_n: int) -> Triangle:
    """Materialize rows 1..max_n and self-check the inter-triangle identities."""
    if max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {max_n}")
    cell = _CELL_FN[kind]
    rows = tuple(tuple(cell(n, k) for k in range(1, n + 1)) for n in range(1, max_n + 1))
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            s = stirling2(n, k)
            expected = {
                TriangleKind.MWNT: factorial(k - 1) * s,
                TriangleKind.AWNT: factorial(k) * s,
                TriangleKind.STIRLING2: s,
            }[kind]
            if rows[n - 1][k - 1] != expected:
                raise InternalConsistencyError(
                    f"{kind.value} self-check failed at (n={n}, k={k}): "
                    f"{rows[n - 1][k - 1]} != {expected}"
                )
    return Triangle(kind=kind, max_n=max_n, rows=rows)
