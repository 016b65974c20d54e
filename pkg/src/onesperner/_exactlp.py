"""Exact rational feasibility of linear systems  A x >= b  with  x >= 0.

Feasibility is decided through the auxiliary problem

    maximise  b . y   subject to   A^T y <= 0,   b . y <= 1,   y >= 0,

whose optimum is 0 exactly when the original system is solvable.  The
auxiliary problem starts feasible at y = 0, so a single simplex phase with
Bland's rule settles it.  At optimum 0, the shadow prices of the "A^T y <= 0"
rows form a solution x of the original system; at optimum 1, the optimal y
is a non-negative combination of rows proving infeasibility, and its support
is returned as a conflicting row subset.  Either witness is re-checked with
exact arithmetic before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]


def feasible_point_or_conflict(
    coeff_rows: Sequence[Row], rhs: Sequence[int | Fraction], nvars: int
) -> tuple[str, list[Fraction] | list[int]]:
    """Either ("point", x) with x >= 0 and coeff_rows[i] . x >= rhs[i] for all
    i, or ("conflict", row indices) naming a subsystem that is already
    infeasible on its own."""
    nrows = len(coeff_rows)
    if nrows == 0:
        return "point", [Fraction(0)] * nvars

    m = nvars + 1  # auxiliary constraint rows
    ncols = nrows  # auxiliary variables, one per original row
    width = ncols + m + 1
    tab: list[list[Fraction]] = []
    for j in range(nvars):
        row = [Fraction(coeff_rows[i][j]) for i in range(ncols)]
        row += [Fraction(0)] * m + [Fraction(0)]
        row[ncols + j] = Fraction(1)
        tab.append(row)
    last = [Fraction(rhs[i]) for i in range(ncols)] + [Fraction(0)] * m + [Fraction(1)]
    last[ncols + nvars] = Fraction(1)
    tab.append(last)

    cost = [Fraction(rhs[i]) for i in range(ncols)] + [Fraction(0)] * m
    basis = [ncols + r for r in range(m)]
    # zrow[j] = z_j - c_j; the slack basis has c_B = 0, so zrow = -cost.
    zrow = [-c for c in cost]

    while True:
        enter = next((j for j in range(width - 1) if zrow[j] < 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        for r in range(m):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][-1] / a
                if (
                    leave is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leave])
                ):
                    leave, best_ratio = r, ratio
        if leave is None:
            raise AssertionError("internal: auxiliary problem cannot be unbounded")
        prow = tab[leave]
        inv = 1 / prow[enter]
        tab[leave] = prow = [x * inv for x in prow]
        for r in range(m):
            if r != leave and tab[r][enter] != 0:
                f = tab[r][enter]
                tab[r] = [a - f * b for a, b in zip(tab[r], prow)]
        f = zrow[enter]
        if f != 0:
            zrow = [a - f * b for a, b in zip(zrow, prow[: width - 1])]
        basis[leave] = enter

    value = sum(cost[basis[r]] * tab[r][-1] for r in range(m))
    if value == 0:
        x = [zrow[ncols + j] for j in range(nvars)]
        for xi in x:
            if xi < 0:
                raise AssertionError("internal: negative dual at optimum")
        for i in range(nrows):
            if sum(Fraction(coeff_rows[i][j]) * x[j] for j in range(nvars)) < rhs[i]:
                raise AssertionError("internal: extracted point violates a row")
        return "point", x

    y = [Fraction(0)] * nrows
    for r in range(m):
        if basis[r] < ncols:
            y[basis[r]] = tab[r][-1]
    support = [i for i in range(nrows) if y[i] > 0]
    for j in range(nvars):
        if sum(y[i] * Fraction(coeff_rows[i][j]) for i in support) > 0:
            raise AssertionError("internal: invalid infeasibility combination")
    if sum(y[i] * Fraction(rhs[i]) for i in support) <= 0:
        raise AssertionError("internal: infeasibility combination has no slack")
    return "conflict", support
