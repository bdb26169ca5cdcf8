"""Exact rational feasibility for systems ``A x >= b, x >= lower``.

Phase-one simplex over :class:`fractions.Fraction` with Bland's rule, so
it always terminates and the returned point satisfies the system exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Number = int | Fraction


def find_feasible_point(a: Sequence[Sequence[Number]], b: Sequence[Number],
                        lower: Sequence[Number]) -> list[Fraction] | None:
    """Return some ``x`` with ``a @ x >= b`` and ``x >= lower``, or None."""
    n = len(lower)
    rows = len(a)
    if any(len(row) != n for row in a) or len(b) != rows:
        raise ValueError("constraint matrix shape does not match bounds")
    lo = [Fraction(v) for v in lower]
    if rows == 0:
        return lo

    # shift to y = x - lower >= 0: a @ y >= b - a @ lower
    rhs = [Fraction(b[i]) - sum(Fraction(a[i][j]) * lo[j] for j in range(n))
           for i in range(rows)]
    # columns: y (n), surplus (rows), artificial (rows)
    width = n + 2 * rows
    tab: list[list[Fraction]] = []
    for i in range(rows):
        sign = 1 if rhs[i] >= 0 else -1
        row = [Fraction(sign * a[i][j]) for j in range(n)]
        row += [Fraction(-sign if k == i else 0) for k in range(rows)]
        row += [Fraction(1 if k == i else 0) for k in range(rows)]
        row.append(sign * rhs[i])
        tab.append(row)
    basis = [n + rows + i for i in range(rows)]

    # reduced costs for minimising the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for j in range(n + rows):
        cost[j] = -sum(tab[i][j] for i in range(rows))
    cost[width] = -sum(tab[i][width] for i in range(rows))

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best: tuple[Fraction, int] | None = None
        for i in range(rows):
            coef = tab[i][entering]
            if coef > 0:
                key = (tab[i][width] / coef, basis[i])
                if best is None or key < best:
                    best, leaving = key, i
        if leaving is None:
            # unbounded direction cannot occur in phase one (objective >= 0)
            raise AssertionError("phase-one simplex reported unbounded")
        _pivot(tab, cost, leaving, entering)
        basis[leaving] = entering

    if cost[width] != 0:
        return None
    y = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            y[var] = tab[i][width]
    return [lo[j] + y[j] for j in range(n)]


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    pivot_row = tab[r]
    p = pivot_row[c]
    tab[r] = pivot_row = [v / p for v in pivot_row]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [v - f * w for v, w in zip(row, pivot_row)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [v - f * w for v, w in zip(cost, pivot_row)]


def satisfies(a: Sequence[Sequence[Number]], b: Sequence[Number],
              lower: Sequence[Number], x: Sequence[Number]) -> bool:
    """Exact check of ``a @ x >= b`` and ``x >= lower``."""
    if any(xi < li for xi, li in zip(x, lower)):
        return False
    return all(sum(Fraction(aij) * xj for aij, xj in zip(row, x)) >= bi
               for row, bi in zip(a, b))
