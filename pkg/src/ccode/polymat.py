"""Polynomials and polynomial matrices over GF(q) in the delay D.

A polynomial is a 1-D int64 array of coefficients, lowest degree first, with
no trailing zeros (the zero polynomial is the empty array).  A polynomial
matrix is a nested list of polynomials; the dense form used elsewhere is an
array of shape (L, rows, cols) holding the coefficient matrices.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import linalg
from .galois import FieldCtx
from .linalg import Matrix

ZERO = np.zeros(0, dtype=np.int64)


def trim(f) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    nz = np.flatnonzero(f)
    return f[: nz[-1] + 1] if len(nz) else ZERO


def deg(f) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(f) - 1


def padd(F: FieldCtx, f, g):
    n = max(len(f), len(g))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(f)] = f
    b[: len(g)] = g
    return trim(F.add(a, b))


def psub(F: FieldCtx, f, g):
    return padd(F, f, F.neg(np.asarray(g, dtype=np.int64)))


def pmul(F: FieldCtx, f, g):
    if not len(f) or not len(g):
        return ZERO
    prods = F.mul(np.asarray(f)[:, None], np.asarray(g)[None, :])
    out = np.zeros(len(f) + len(g) - 1, dtype=np.int64)
    for i in range(len(f)):
        out[i : i + len(g)] = F.add(out[i : i + len(g)], prods[i])
    return trim(out)


def pscale(F: FieldCtx, f, c):
    return trim(F.mul(np.asarray(f, dtype=np.int64), c))


def pshift(f, s: int):
    return trim(np.concatenate([np.zeros(s, dtype=np.int64), f])) if len(f) else ZERO


def pdivmod(F: FieldCtx, f, g):
    g = trim(g)
    if not len(g):
        raise ZeroDivisionError("polynomial division by zero")
    r = np.array(trim(f), dtype=np.int64)
    if len(r) < len(g):
        return ZERO, r
    lead_inv = F.inv(int(g[-1]))
    quot = np.zeros(len(r) - len(g) + 1, dtype=np.int64)
    for s in range(len(r) - len(g), -1, -1):
        c = r[s + len(g) - 1]
        if c:
            c = F.mul(c, lead_inv)
            quot[s] = c
            r[s : s + len(g)] = F.sub(r[s : s + len(g)], F.mul(g, c))
    return trim(quot), trim(r[: len(g) - 1])


def pgcd(F: FieldCtx, f, g):
    """Monic gcd (zero if both are zero)."""
    a, b = trim(f), trim(g)
    while len(b):
        a, b = b, pdivmod(F, a, b)[1]
    if not len(a):
        return ZERO
    return pscale(F, a, F.inv(int(a[-1])))


def monic(F: FieldCtx, f):
    f = trim(f)
    return pscale(F, f, F.inv(int(f[-1]))) if len(f) else f


def to_nested(coeffs: np.ndarray):
    """(L, r, c) coefficient array -> r x c nested polynomial list."""
    L, r, c = coeffs.shape
    return [[trim(coeffs[:, i, j]) for j in range(c)] for i in range(r)]


def to_dense(P, rows=None, cols=None) -> np.ndarray:
    rows = len(P) if rows is None else rows
    cols = (len(P[0]) if P else 0) if cols is None else cols
    L = max([len(f) for row in P for f in row] + [1])
    out = np.zeros((L, rows, cols), dtype=np.int64)
    for i, row in enumerate(P):
        for j, f in enumerate(row):
            out[: len(f), i, j] = f
    return out


def pmat_mul(F: FieldCtx, A, B):
    rows, inner, cols = len(A), len(B), len(B[0]) if B else 0
    out = []
    for i in range(rows):
        out.append([])
        for j in range(cols):
            acc = ZERO
            for t in range(inner):
                if len(A[i][t]) and len(B[t][j]):
                    acc = padd(F, acc, pmul(F, A[i][t], B[t][j]))
            out[i].append(acc)
    return out


# ---------------------------------------------------------------------------
# basicness


def column_hermite(F: FieldCtx, P):
    """Unimodular column operations P U = [L 0] with L lower triangular.

    Returns (L, U) as nested lists, or (None, U) if P does not have full row
    rank over GF(q)(D).  gcd of the maximal minors of P equals det L up to a
    unit, because U is unimodular.
    """
    k = len(P)
    n = len(P[0]) if k else 0
    A = [[f.copy() for f in row] for row in P]
    U = [[np.array([1], dtype=np.int64) if i == j else ZERO for j in range(n)] for i in range(n)]

    def col_op(dst, src, mult):  # col dst -= mult * col src
        for M in (A, U):
            for row in M:
                if len(row[src]):
                    row[dst] = psub(F, row[dst], pmul(F, mult, row[src]))

    def swap(a, b):
        for M in (A, U):
            for row in M:
                row[a], row[b] = row[b], row[a]

    for i in range(k):
        while True:
            live = [j for j in range(i, n) if len(A[i][j])]
            if not live:
                return None, U
            piv = min(live, key=lambda j: (deg(A[i][j]), j))
            if piv != i:
                swap(i, piv)
            others = [j for j in range(i + 1, n) if len(A[i][j])]
            if not others:
                break
            for j in others:
                quot, _ = pdivmod(F, A[i][j], A[i][i])
                col_op(j, i, quot)
    L = [[A[i][j] for j in range(k)] for i in range(k)]
    return L, U


def minor_gcd(F: FieldCtx, P) -> np.ndarray:
    """Monic gcd of all maximal minors (zero polynomial if rank deficient)."""
    L, _ = column_hermite(F, P)
    if L is None:
        return ZERO
    det = np.array([1], dtype=np.int64)
    for i in range(len(L)):
        det = pmul(F, det, L[i][i])
    return monic(F, det)


def right_inverse(F: FieldCtx, P):
    """Polynomial right inverse R (n x k) with P R = I, or None if P is not basic."""
    L, U = column_hermite(F, P)
    if L is None or any(deg(L[i][i]) != 0 for i in range(len(L))):
        return None
    k = len(L)
    # X = L^{-1} by forward substitution; entries stay polynomial
    X = [[ZERO for _ in range(k)] for _ in range(k)]
    for i in range(k):
        dinv = F.inv(int(L[i][i][0]))
        for j in range(k):
            acc = np.array([1], dtype=np.int64) if i == j else ZERO
            for t in range(i):
                if len(L[i][t]) and len(X[t][j]):
                    acc = psub(F, acc, pmul(F, L[i][t], X[t][j]))
            X[i][j] = pscale(F, acc, dinv)
    Uk = [row[:k] for row in U]
    return pmat_mul(F, Uk, X)


def kernel_basis(F: FieldCtx, P):
    """Polynomial basis (rows) of {v : P v^T = 0}; basic by construction."""
    L, U = column_hermite(F, P)
    k = len(P)
    n = len(U)
    if L is None:
        raise ValueError("matrix is not of full row rank")
    return [[U[j][c] for j in range(n)] for c in range(k, n)]


def minors_gcd_enum(F: FieldCtx, P, budget=10**6, samples=10**4, rng=None):
    """gcd of maximal minors by explicit enumeration (an independent check).

    Returns (gcd, complete).  If the number of column subsets exceeds
    ``budget`` only ``samples`` random subsets are used; a constant gcd is
    still a proof of basicness but a non-constant one is then inconclusive.
    """
    from math import comb

    k = len(P)
    n = len(P[0]) if k else 0
    total = comb(n, k)
    if total <= budget:
        subsets = itertools.combinations(range(n), k)
        complete = True
    else:
        rng = rng or np.random.default_rng(0)
        subsets = (tuple(sorted(rng.choice(n, k, replace=False))) for _ in range(samples))
        complete = False
    g = ZERO
    for cols in subsets:
        g = pgcd(F, g, det_poly(F, [[P[i][j] for j in cols] for i in range(k)]))
        if len(g) == 1:
            return g, True
    return g, complete


def det_poly(F: FieldCtx, M) -> np.ndarray:
    """Determinant of a square polynomial matrix by fraction-free elimination."""
    k = len(M)
    if k == 0:
        return np.array([1], dtype=np.int64)
    # Euclidean row reduction keeps everything polynomial
    A = [[f.copy() for f in row] for row in M]
    sign = 1
    det = np.array([1], dtype=np.int64)
    for c in range(k):
        while True:
            live = [r for r in range(c, k) if len(A[r][c])]
            if not live:
                return ZERO
            piv = min(live, key=lambda r: (deg(A[r][c]), r))
            if piv != c:
                A[c], A[piv] = A[piv], A[c]
                sign = -sign
            rest = [r for r in range(c + 1, k) if len(A[r][c])]
            if not rest:
                break
            for r in rest:
                quot, _ = pdivmod(F, A[r][c], A[c][c])
                A[r] = [psub(F, A[r][j], pmul(F, quot, A[c][j])) for j in range(k)]
        det = pmul(F, det, A[c][c])
    return det if sign == 1 else pscale(F, det, F.neg(1))


# ---------------------------------------------------------------------------
# degrees and reduction


def row_degrees(coeffs: np.ndarray) -> np.ndarray:
    """Per-row degree of a dense (L, r, c) polynomial matrix; -1 for zero rows."""
    L, r, _ = coeffs.shape
    nz = coeffs.any(axis=2)  # (L, r)
    out = np.full(r, -1, dtype=np.int64)
    for j in range(L):
        out[nz[j]] = j
    return out


def leading_matrix(coeffs: np.ndarray) -> np.ndarray:
    """Row i holds the coefficient of D^{deg row i} (zero rows stay zero)."""
    degs = row_degrees(coeffs)
    r = coeffs.shape[1]
    out = np.zeros(coeffs.shape[1:], dtype=np.int64)
    for i in range(r):
        if degs[i] >= 0:
            out[i] = coeffs[degs[i], i]
    return out


def row_reduce(F: FieldCtx, coeffs: np.ndarray) -> np.ndarray:
    """Unimodular row operations until the leading coefficient matrix has full
    row rank (a reduced, also called minimal, basis of the same module)."""
    C = np.array(coeffs, dtype=np.int64)
    while True:
        degs = row_degrees(C)
        if (degs < 0).any():
            raise ValueError("rows are dependent over GF(q)(D)")
        Lc = Matrix(F, leading_matrix(C))
        ker = linalg.kernel(Lc.T)  # c with c Lc = 0
        if ker.rows == 0:
            break
        c = ker.a[0]
        support = np.flatnonzero(c)
        top = support[np.argmax(degs[support])]
        dtop = degs[top]
        new = np.zeros((C.shape[0], C.shape[2]), dtype=np.int64)
        scale = F.inv(int(c[top]))
        for i in support:
            shift = dtop - degs[i]
            w = F.mul(int(c[i]), scale)
            for j in range(degs[i] + 1):
                new[j + shift] = F.add(new[j + shift], F.mul(C[j, i], w))
        C[:, top] = new[: C.shape[0]]
        C = C[: max(row_degrees(C).max() + 1, 1)]
    return C
