"""Dense matrices over a FieldCtx.

Column indices are 0-based throughout.
"""

from __future__ import annotations

import numpy as np

from .galois import FieldCtx


class Matrix:
    """Immutable dense matrix; ``a`` holds element encodings (int64)."""

    __slots__ = ("field", "a")

    def __init__(self, field: FieldCtx, a):
        arr = np.array(a, dtype=np.int64, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries out of range for {field}")
        arr.setflags(write=False)
        self.field = field
        self.a = arr

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.a.T)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.a.shape == other.a.shape
            and np.array_equal(self.a, other.a)
        )

    def __hash__(self):
        return hash((self.field, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field}, {self.a.tolist()})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _same_field(self, other)
        return Matrix(self.field, matmul(self.field, self.a, other.a))

    def __add__(self, other):
        _same_field(self, other)
        return Matrix(self.field, self.field.add(self.a, other.a))

    def __neg__(self):
        return Matrix(self.field, self.field.neg(self.a))

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, self.field.mul(self.a, c))

    def is_zero(self) -> bool:
        return not self.a.any()

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return rref(self)[1]

    def kernel(self) -> "Matrix":
        return kernel(self)

    def row_basis(self) -> "Matrix":
        return row_basis(self)

    def inverse(self) -> "Matrix":
        return inverse(self)

    def nonzero_rows(self) -> "Matrix":
        keep = self.a.any(axis=1)
        return Matrix(self.field, self.a[keep].reshape(-1, self.cols))


def _same_field(*ms):
    f = ms[0].field
    for m in ms[1:]:
        if m.field != f:
            raise ValueError(f"field mismatch: {f} vs {m.field}")


def matmul(field: FieldCtx, a, b):
    """Product of raw encoding arrays a (r x s) and b (s x t)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if field.q == field.p:
        return (a @ b) % field.p
    if a.shape[-1] == 0:
        return np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    return field.sum(field.mul(a[..., :, None], b), axis=-2)


def rref(A: Matrix):
    """Reduced row-echelon form: (R, rank, pivot_cols)."""
    F = A.field
    r = np.array(A.a, dtype=np.int64)
    rows, cols = r.shape
    pivots = []
    lead = 0
    for c in range(cols):
        if lead >= rows:
            break
        nz = np.flatnonzero(r[lead:, c])
        if not len(nz):
            continue
        piv = lead + nz[0]
        if piv != lead:
            r[[lead, piv]] = r[[piv, lead]]
        if r[lead, c] != 1:
            r[lead] = F.mul(r[lead], F.inv(r[lead, c]))
        factors = r[:, c].copy()
        factors[lead] = 0
        hit = np.flatnonzero(factors)
        if len(hit):
            r[hit] = F.sub(r[hit], F.mul(factors[hit, None], r[lead][None, :]))
        pivots.append(c)
        lead += 1
    return Matrix(F, r), lead, tuple(pivots)


def rank(A: Matrix) -> int:
    return rref(A)[1]


def row_basis(A: Matrix) -> Matrix:
    R, rk, _ = rref(A)
    return Matrix(A.field, R.a[:rk].reshape(rk, A.cols))


def kernel(A: Matrix) -> Matrix:
    """Rows span {v : A v^T = 0}."""
    F = A.field
    R, rk, pivots = rref(A)
    cols = A.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for j, pc in enumerate(pivots):
            K[i, pc] = F.neg(R.a[j, f])
    return Matrix(F, K.reshape(len(free), cols))


def inverse(A: Matrix) -> Matrix:
    n = A.rows
    if A.cols != n:
        raise ValueError("only square matrices are invertible")
    aug = stack_h(A, Matrix.identity(A.field, n))
    R, rk, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("singular matrix")
    return Matrix(A.field, R.a[:, n:])


def same_row_space(A: Matrix, B: Matrix) -> bool:
    _same_field(A, B)
    if A.cols != B.cols:
        return False
    return row_basis(A) == row_basis(B)


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    _same_field(A, B)
    F = A.field
    blocks = F.mul(A.a[:, None, :, None], B.a[None, :, None, :])
    ra, ca = A.shape
    rb, cb = B.shape
    return Matrix(F, blocks.reshape(ra * rb, ca * cb))


def stack_v(*ms: Matrix) -> Matrix:
    _same_field(*ms)
    cols = {m.cols for m in ms if m.rows}
    if len(cols) > 1:
        raise ValueError(f"column mismatch in vertical stack: {sorted(cols)}")
    width = cols.pop() if cols else max(m.cols for m in ms)
    parts = [m.a.reshape(m.rows, width) for m in ms]
    return Matrix(ms[0].field, np.vstack(parts))


def stack_h(*ms: Matrix) -> Matrix:
    _same_field(*ms)
    if len({m.rows for m in ms}) > 1:
        raise ValueError("row mismatch in horizontal stack")
    return Matrix(ms[0].field, np.hstack([m.a for m in ms]))


def block_diag(*ms: Matrix) -> Matrix:
    _same_field(*ms)
    out = np.zeros((sum(m.rows for m in ms), sum(m.cols for m in ms)), dtype=np.int64)
    r = c = 0
    for m in ms:
        out[r : r + m.rows, c : c + m.cols] = m.a
        r += m.rows
        c += m.cols
    return Matrix(ms[0].field, out)


def delete_col(A: Matrix, i: int) -> Matrix:
    if not 0 <= i < A.cols:
        raise IndexError(f"column {i} out of range for {A.cols} columns")
    return Matrix(A.field, np.delete(A.a, i, axis=1))


def append_parity_col(A: Matrix) -> Matrix:
    """Append a column so that every row sums to zero."""
    F = A.field
    col = F.neg(F.sum(A.a, axis=1)) if A.cols else np.zeros(A.rows, dtype=np.int64)
    return Matrix(F, np.hstack([A.a, col.reshape(-1, 1)]))


def pad_rows(A: Matrix, rows: int, positions=None) -> Matrix:
    """Place the rows of A at ``positions`` (default: top) of a rows x n zero matrix."""
    if positions is None:
        positions = range(A.rows)
    positions = list(positions)
    if len(positions) != A.rows or (positions and max(positions) >= rows):
        raise ValueError("cannot place rows")
    out = np.zeros((rows, A.cols), dtype=np.int64)
    if positions:
        out[positions] = A.a
    return Matrix(A.field, out)


def random_matrix(field: FieldCtx, rows: int, cols: int, rng, full_rank=False) -> Matrix:
    while True:
        M = Matrix(field, rng.integers(0, field.q, size=(rows, cols)))
        if not full_rank or rank(M) == min(rows, cols):
            return M
