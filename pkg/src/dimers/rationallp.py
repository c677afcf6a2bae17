r"""
Exact rational linear programming by dense two-phase simplex.

Problems here are tiny (tens of variables), so a plain tableau over
``fractions.Fraction`` with Bland's anti-cycling rule is enough and keeps
feasibility decisions exact, which float solvers cannot guarantee.
"""
from __future__ import annotations

from fractions import Fraction


class Infeasible(Exception):
    pass


class Unbounded(Exception):
    pass


def _pivot(tableau, basis, row, col):
    m = len(tableau)
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for r in range(m):
        if r != row and tableau[r][col] != 0:
            factor = tableau[r][col]
            tableau[r] = [a - factor * b for a, b in zip(tableau[r], tableau[row])]
    basis[row] = col


def _solve_phase(tableau, basis, ncols):
    # objective row is tableau[-1]; maximize, Bland's rule
    while True:
        obj = tableau[-1]
        col = next((j for j in range(ncols) if obj[j] > 0), None)
        if col is None:
            return
        best = None
        for r in range(len(tableau) - 1):
            a = tableau[r][col]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise Unbounded()
        _pivot(tableau, basis, best[1], col)


def simplex_max(c, a_eq, b_eq):
    """Maximize ``c . x`` subject to ``a_eq x = b_eq`` and ``x >= 0``.

    Returns ``(value, x)`` as Fractions.  Raises :class:`Infeasible` or
    :class:`Unbounded`.
    """
    m = len(a_eq)
    n = len(c)
    c = [Fraction(v) for v in c]
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in a_eq[i]]
        rhs = Fraction(b_eq[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [Fraction(0)] * m + [rhs])
        rows[-1][n + i] = Fraction(1)

    # phase 1: drive the artificial variables out
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            obj[j] += rows[i][j]
    for i in range(m):
        obj[n + i] = Fraction(0)
    tableau = rows + [obj]
    basis = [n + i for i in range(m)]
    _solve_phase(tableau, basis, n + m)
    if tableau[-1][-1] != 0:
        raise Infeasible()
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, r, col)
    keep = [r for r in range(m) if basis[r] < n]
    rows = [[tableau[r][j] for j in range(n)] + [tableau[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]

    # phase 2
    obj = [Fraction(v) for v in c] + [Fraction(0)]
    for r, bcol in enumerate(basis):
        if obj[bcol] != 0:
            factor = obj[bcol]
            obj = [a - factor * b for a, b in zip(obj, rows[r])]
    tableau = rows + [obj]
    _solve_phase(tableau, basis, n)
    x = [Fraction(0)] * n
    for r, bcol in enumerate(basis):
        x[bcol] = tableau[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x
