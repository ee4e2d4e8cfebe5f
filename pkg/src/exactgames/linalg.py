"""Exact linear algebra over rationals: elimination, a small simplex, and
vertex enumeration of low-dimensional polytopes.

Everything here works on plain lists of Rationals.  Sizes are tiny (at most
a dozen unknowns), so the algorithms favour exactness and clarity over
asymptotics: Gaussian elimination with exact pivots, Bland's rule in the
simplex, and vertices found by enumerating tight constraint subsets.
"""

from __future__ import annotations

from itertools import combinations

from .rational import Rational, ZERO, ONE

__all__ = [
    "solve_system",
    "matrix_rank",
    "polytope_vertices",
    "max_sum_lp",
    "UnboundedError",
]


class UnboundedError(ArithmeticError):
    """Raised when a linear program has no finite optimum."""


def solve_system(rows, rhs):
    """Solve ``rows @ x = rhs`` exactly.

    Returns ``(status, x)`` where status is ``"unique"`` (x is the solution),
    ``"inconsistent"`` (x is None) or ``"underdetermined"`` (x is None).
    The system may be rectangular; redundant consistent rows are fine.
    """
    if not rows:
        return ("underdetermined", None)
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    nrows = len(aug)
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if aug[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        if pv != 1:
            aug[r] = [v / pv for v in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return ("inconsistent", None)
    if len(pivot_cols) < ncols:
        return ("underdetermined", None)
    x = [ZERO] * ncols
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][ncols]
    return ("unique", x)


def matrix_rank(rows) -> int:
    """Rank of a rational matrix by elimination."""
    if not rows:
        return 0
    work = [list(r) for r in rows]
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][c]
        for i in range(rank + 1, len(work)):
            if work[i][c] != 0:
                f = work[i][c] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def polytope_vertices(dim, equalities, inequalities):
    """All vertices of ``{x : eq, ineq}`` with inequalities ``coeffs @ x <= rhs``.

    ``equalities`` and ``inequalities`` are lists of ``(coeffs, rhs)`` pairs.
    Vertices are found by making ``dim - rank(eq)`` inequalities tight at a
    time; sound and complete for bounded polytopes at these sizes.  Returns
    deduplicated vertices sorted lexicographically, as tuples.
    """
    eq_rows = [list(c) for c, _ in equalities]
    eq_rhs = [r for _, r in equalities]
    free = dim - matrix_rank(eq_rows) if eq_rows else dim
    if free < 0:
        return []
    seen = set()
    for chosen in combinations(range(len(inequalities)), free):
        rows = eq_rows + [list(inequalities[i][0]) for i in chosen]
        rhs = eq_rhs + [inequalities[i][1] for i in chosen]
        status, x = solve_system(rows, rhs)
        if status != "unique":
            continue
        if all(_dot(c, x) == r for c, r in equalities) and all(
            _dot(c, x) <= r for c, r in inequalities
        ):
            seen.add(tuple(x))
    return sorted(seen)


def _dot(coeffs, x):
    total = ZERO
    for c, v in zip(coeffs, x):
        if c != 0 and v != 0:
            total += c * v
    return total


def max_sum_lp(matrix):
    """Maximize ``sum(y)`` subject to ``matrix @ y <= 1`` and ``y >= 0``.

    Requires every entry positive (which makes the program bounded and the
    slack basis feasible).  Dense tableau simplex with Bland's rule, so it
    terminates on degenerate bases.  Returns the optimal value.
    """
    m = len(matrix)
    n = len(matrix[0])
    # columns: y_0..y_{n-1}, s_0..s_{m-1}, rhs
    tableau = []
    for i in range(m):
        row = [Rational(v) for v in matrix[i]]
        row += [ONE if j == i else ZERO for j in range(m)]
        row.append(ONE)
        tableau.append(row)
    obj = [ONE] * n + [ZERO] * m + [ZERO]
    basis = list(range(n, n + m))
    while True:
        enter = next((j for j in range(n + m) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coeff = tableau[i][enter]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise UnboundedError("objective is unbounded")
        pv = tableau[leave][enter]
        tableau[leave] = [v / pv for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leave])]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, tableau[leave])]
        basis[leave] = enter
    return -obj[-1]
