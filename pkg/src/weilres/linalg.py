"""Exact matrix helpers over an arbitrary commutative coefficient ring.

Matrices are tuples of row tuples; the ring is any handle providing zero()
and one() (a Field, a FreeExtension or a PolyRing).  The characteristic
polynomial uses the Berkowitz iteration, which is division-free and therefore
valid when the entries are polynomials.
"""

from __future__ import annotations


def mat_identity(n, ring):
    one, zero = ring.one(), ring.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_zero(n, ring):
    zero = ring.zero()
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = tuple(zip(*b))
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * bt[j][0]
            for l in range(1, k):
                acc = acc + a[i][l] * bt[j][l]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(a, v):
    return tuple(_dot(row, v) for row in a)


def _dot(row, v):
    acc = row[0] * v[0]
    for x, y in zip(row[1:], v[1:]):
        acc = acc + x * y
    return acc


def mat_pow(a, k, ring):
    out = mat_identity(len(a), ring)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def mat_is_zero(a):
    return all(entry.is_zero() for row in a for entry in row)


def mat_scale(a, c):
    return tuple(tuple(entry * c for entry in row) for row in a)


def berkowitz_charpoly(matrix, ring):
    """Coefficients [1, c_1, ..., c_n] of det(z*I - M) = z^n + c_1 z^(n-1) + ...

    Division-free: only ring additions and multiplications are used, so the
    entries may live in a polynomial ring.
    """
    n = len(matrix)
    one, zero = ring.one(), ring.zero()
    vec = [one]
    for r in range(1, n + 1):
        lead = matrix[r - 1][r - 1]
        row = matrix[r - 1][: r - 1]
        col = tuple(matrix[i][r - 1] for i in range(r - 1))
        sub = tuple(tuple(matrix[i][j] for j in range(r - 1)) for i in range(r - 1))
        # Toeplitz column: 1, -a, -R C, -R M C, -R M^2 C, ...
        toep = [one, -lead]
        v = col
        for _ in range(r - 1):
            toep.append(-_dot(row, v))
            v = mat_vec(sub, v)
        new = []
        for i in range(r + 1):
            acc = zero
            for j in range(max(0, i - r), min(i, r - 1) + 1):
                acc = acc + toep[i - j] * vec[j]
            new.append(acc)
        vec = new
    return vec


def eliminate_linear(rows, nvars, field):
    """Gauss-Jordan elimination of homogeneous linear forms over a field.

    rows: coefficient vectors (length nvars) of linear relations.  Pivots are
    chosen column by column from the right, so variables late in the order are
    eliminated first.  Returns a dict {pivot column: coefficient vector of the
    solved expression over the free columns}, i.e. x_pivot = sum c_j x_j.
    """
    work = [list(r) for r in rows if any(not c.is_zero() for c in r)]
    pivots = {}
    for col in range(nvars - 1, -1, -1):
        pivot_row = None
        for row in work:
            if not row[col].is_zero() and all(
                    row[c].is_zero() for c in pivots if c != col):
                pivot_row = row
                break
        if pivot_row is None:
            continue
        inv = pivot_row[col].inverse()
        for j in range(nvars):
            pivot_row[j] = pivot_row[j] * inv
        for row in work:
            if row is pivot_row or row[col].is_zero():
                continue
            factor = row[col]
            for j in range(nvars):
                row[j] = row[j] - factor * pivot_row[j]
        pivots[col] = pivot_row
    solved = {}
    for col, row in pivots.items():
        expr = [-row[j] if j != col else field.zero() for j in range(nvars)]
        solved[col] = expr
    return solved
