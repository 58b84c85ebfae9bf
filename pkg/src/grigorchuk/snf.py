"""Integer Smith normal form with transformation matrices.

Plain row/column reduction with exact arbitrary-precision integers; the
matrices here are small (at most a few hundred entries on each side).
"""

from __future__ import annotations


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix):
    """Return (D, U, V) with U @ A @ V = D, U and V unimodular, and D
    diagonal with d1 | d2 | ... nonnegative."""
    A = [list(row) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row[dst] += k * row[src]
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(m, n):
        # pick the nonzero entry of smallest magnitude as pivot; re-selecting
        # it after every sweep keeps quotients small (each sweep is one
        # Euclid step, so the pivot magnitude strictly decreases)
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        p = A[t][t]
        for i in range(t + 1, m):
            if A[i][t] != 0:
                add_row(i, t, -(A[i][t] // p))
        for j in range(t + 1, n):
            if A[t][j] != 0:
                add_col(j, t, -(A[t][j] // p))
        if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
            continue  # remainders are smaller than the pivot; re-select
        if A[t][t] < 0:
            negate_row(t)
        # enforce divisibility of the remaining block by the pivot
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1
    D = [[A[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    # A is diagonal at this point; assert to catch reduction bugs
    for i in range(m):
        for j in range(n):
            if i != j and A[i][j] != 0:
                raise AssertionError("Smith reduction left an off-diagonal entry")
    return D, U, V


def mat_mul(X, Y):
    rows, inner, cols = len(X), len(Y), len(Y[0]) if Y else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        Xi = X[i]
        for k in range(inner):
            x = Xi[k]
            if x:
                Yk = Y[k]
                Oi = out[i]
                for j in range(cols):
                    Oi[j] += x * Yk[j]
    return out


def det(matrix) -> int:
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    A = [list(row) for row in matrix]
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1
