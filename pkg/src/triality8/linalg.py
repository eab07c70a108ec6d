"""Dense exact linear algebra over Q(r3) and Q(r3)[i].

Matrices are lists of rows of Scalar/CScalar. Everything here is plain
Gaussian elimination with exact field arithmetic; there is no pivoting
heuristic beyond "first nonzero", since exact zero tests make breakdown
impossible.
"""

from __future__ import annotations

from .scalars import CScalar, Scalar

ZERO = Scalar(0)
ONE = Scalar(1)


def zeros(rows, cols):
    return [[ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    Bt = [[B[r][c] for r in range(k)] for c in range(m)]
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def mat_add(A, B):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    return [[s * x for x in row] for row in A]


def transpose(A):
    if not A:
        return []
    return [[A[r][c] for r in range(len(A))] for c in range(len(A[0]))]


def mat_eq(A, B):
    if len(A) != len(B) or (A and len(A[0]) != len(B[0])):
        return False
    return all(x == y for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def is_zero_matrix(A):
    return all(not x for row in A for x in row)


def rref(A):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = [row[:] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if R[i][c]), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = R[r][c].inverse()
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A):
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def nullspace(A, ncols=None):
    """Basis of the right kernel, as a list of column vectors."""
    if not A:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols or 0)]
    R, pivots = rref(A)
    cols = len(A[0])
    piv_set = set(pivots)
    free = [c for c in range(cols) if c not in piv_set]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(v)
    return basis


def solve(A, b):
    """One exact solution of A x = b, or None if inconsistent."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    aug = [A[r][:] + [b[r]] for r in range(rows)]
    R, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for r, c in enumerate(pivots):
        x[c] = R[r][cols]
    return x


def det(A):
    n = len(A)
    M = [row[:] for row in A]
    sign = 1
    acc = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return ZERO
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            sign = -sign
        piv = M[c][c]
        acc = acc * piv
        inv = piv.inverse()
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return acc if sign == 1 else -acc


def column_space_basis(vectors):
    """Subset basis of the span of the given (column) vectors."""
    if not vectors:
        return []
    A = transpose(vectors)  # vectors as columns
    _, pivots = rref(A)
    return [vectors[c] for c in pivots]


def in_span(basis, v):
    """Is v in the span of the basis vectors?"""
    if not basis:
        return all(not x for x in v)
    A = transpose(basis)
    return solve(A, v) is not None


def same_span(basis1, basis2):
    if len(column_space_basis(basis1)) != len(column_space_basis(basis2)):
        return False
    return all(in_span(basis2, v) for v in basis1) and all(
        in_span(basis1, v) for v in basis2
    )


def complexify_matrix(A):
    return [[x if isinstance(x, CScalar) else CScalar(x) for x in row] for row in A]
