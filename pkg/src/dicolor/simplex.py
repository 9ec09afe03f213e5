"""Exact-arithmetic primal simplex for packing programs.

Solves  max c.x  subject to  A x <= b,  x >= 0  with all data rational and
b >= 0, so the slack basis is feasible from the start.  Bland's smallest-
index rule is used for both the entering and the leaving variable, which
makes the pivot path deterministic and rules out cycling.  The optimal
duals are read off the reduced costs of the slack columns, so one solve
yields a primal/dual pair with exactly equal objectives.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DicolorError, InputError

ZERO = Fraction(0)
ONE = Fraction(1)


class UnboundedError(DicolorError):
    """The packing program is unbounded (cannot happen for 0/1 columns)."""


def simplex_max(
    c: list[Fraction], A: list[list[Fraction]], b: list[Fraction]
) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Return ``(value, x, y)`` with x primal-optimal and y dual-optimal.

    ``y`` solves  min b.y  s.t.  A^T y >= c,  y >= 0; strong duality gives
    ``sum(c*x) == sum(b*y) == value`` exactly.
    """
    m = len(A)
    n = len(c)
    for i, bi in enumerate(b):
        if bi < 0:
            raise InputError(f"rhs {i} is negative; slack start needs b >= 0")
    # tableau: n structural columns, m slack columns, rhs
    rows = [
        [Fraction(A[i][j]) for j in range(n)]
        + [ONE if k == i else ZERO for k in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    obj = [-Fraction(cj) for cj in c] + [ZERO] * (m + 1)
    basis = [n + i for i in range(m)]

    while True:
        enter = -1
        for j in range(n + m):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise UnboundedError("objective unbounded above")
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        prow = rows[leave]
        for i in range(m):
            if i != leave and rows[i][enter]:
                f = rows[i][enter]
                rows[i] = [v - f * pv for v, pv in zip(rows[i], prow)]
        if obj[enter]:
            f = obj[enter]
            for j in range(n + m + 1):
                obj[j] -= f * prow[j]
        basis[leave] = enter

    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = rows[i][-1]
    y = [obj[n + i] for i in range(m)]
    return obj[-1], x, y
