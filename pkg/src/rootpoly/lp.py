"""Exact feasibility of ``A x = b, x >= 0`` over the rationals.

A phase-one simplex method on a dense tableau of ``Fraction`` entries,
with Bland's rule to rule out cycling.
"""

from fractions import Fraction


def feasible_point(A, b):
    """A nonnegative solution of ``A x = b`` or None.

    ``A`` is a list of rows (sequences of rationals), ``b`` a sequence of
    rationals.  The returned solution is a basic one, as a list of Fractions.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    T = []
    for i in range(rows):
        row = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
        # slack-free phase one: one artificial per row
        T.append(row + [Fraction(int(i == j)) for j in range(rows)] + [rhs])
    width = cols + rows
    basis = [cols + i for i in range(rows)]
    # objective: minimise the sum of artificials, expressed in nonbasic terms
    obj = [Fraction(0)] * (width + 1)
    for i in range(rows):
        for j in range(width + 1):
            obj[j] -= T[i][j]
    for j in range(cols, width):
        obj[j] = Fraction(0)

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(rows):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen: phase one is bounded below by zero
            break
        _pivot(T, obj, leave, enter)
        basis[leave] = enter

    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for i, j in enumerate(basis):
        if j < cols:
            x[j] = T[i][-1]
    return x


def _pivot(T, obj, r, c):
    pr = T[r]
    p = pr[c]
    if p != 1:
        T[r] = pr = [a / p for a in pr]
    for i, row in enumerate(T):
        if i != r:
            f = row[c]
            if f:
                T[i] = [a - f * b for a, b in zip(row, pr)]
    f = obj[c]
    if f:
        obj[:] = [a - f * b for a, b in zip(obj, pr)]


def rank(rows):
    """Exact rank of a rational matrix by Gaussian elimination."""
    M = [[Fraction(a) for a in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r
