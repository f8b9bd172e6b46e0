"""Linear block codes over GF(q): construction, exact distances, transformations.

Minimum distances are found by enumerating messages of a systematic generator
in order of increasing message weight.  A codeword's weight is at least the
weight of its message, so after all messages of weight <= w are done every
remaining codeword has weight > w; this turns a truncated enumeration into a
certified lower bound and lets the exact search stop early.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .galois import Basis, FieldCtx, expand_element, relative_degree
from .linalg import Matrix

DEFAULT_BUDGET = 2**22
_CHUNK_ELEMENTS = 2**22


class BudgetExceeded(RuntimeError):
    """An exact enumeration would exceed the configured budget."""


def default_budget() -> int:
    """Enumeration cap; the CCODE_BUDGET environment variable overrides it."""
    env = os.environ.get("CCODE_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


class MinDistance(NamedTuple):
    d: int | None  # None for the zero code
    exact: bool
    upper: int | None = None  # weight of the lightest codeword seen


class BlockCode:
    """An [n, k] linear code with generator G and parity-check H."""

    def __init__(self, G: Matrix, H: Matrix, split_hint=None, d: MinDistance | None = None):
        if G.field != H.field or G.cols != H.cols:
            raise ValueError("generator and parity-check matrices do not conform")
        if G.rows and H.rows and linalg.matmul(G.field, G.a, H.a.T).any():
            raise ValueError("G H^T != 0")
        self.field = G.field
        self.G = G
        self.H = H
        self.split_hint = tuple(split_hint) if split_hint else None
        self._d = d

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def degenerate(self) -> bool:
        return self.k == 0 or self.k == self.n

    def __repr__(self):
        d = self._d.d if self._d and self._d.exact else "?"
        return f"BlockCode[{self.n}, {self.k}, {d}]_{self.field.q}"

    def dual(self) -> "BlockCode":
        return dual(self)

    def min_distance(self, budget=None) -> MinDistance:
        return min_distance(self, budget)

    def same_code(self, other: "BlockCode") -> bool:
        return self.field == other.field and linalg.same_row_space(self.G, other.G)


def make_code(field: FieldCtx, G=None, H=None, split_hint=None) -> BlockCode:
    """Build a code from a generator or a parity-check matrix.

    The given matrix is reduced to a row basis first; the other one is its kernel.
    """
    if (G is None) == (H is None):
        raise ValueError("give exactly one of G or H")
    if G is not None:
        G = G if isinstance(G, Matrix) else Matrix(field, G)
        if G.rank() != G.rows:
            G = G.row_basis()
        return BlockCode(G, G.kernel(), split_hint)
    H = H if isinstance(H, Matrix) else Matrix(field, H)
    if H.rank() != H.rows:
        H = H.row_basis()
    return BlockCode(H.kernel(), H, split_hint)


def dual(C: BlockCode) -> BlockCode:
    return BlockCode(C.H, C.G)


# ---------------------------------------------------------------------------
# enumeration


def _weight(words) -> np.ndarray:
    return np.count_nonzero(words, axis=-1)


def level_size(k: int, w: int, q: int) -> int:
    """Projective messages of weight w (first nonzero entry fixed to 1)."""
    return math.comb(k, w) * (q - 1) ** (w - 1) if w else 1


def iter_level(G: Matrix, w: int):
    """Yield chunks of codewords m G for projective messages m of weight w.

    Scalar multiples share supports, weights and even/odd class, so the first
    nonzero message symbol is fixed to 1.
    """
    F = G.field
    k, n = G.shape
    if w == 0 or w > k:
        return
    nonzero = np.arange(1, F.q, dtype=np.int64)
    combos = list(itertools.product(nonzero.tolist(), repeat=w - 1))
    tails = np.array(combos, dtype=np.int64).reshape(len(combos), w - 1)
    vals = np.hstack([np.ones((len(tails), 1), dtype=np.int64), tails])
    per_support = len(vals) * n * w
    step = max(1, _CHUNK_ELEMENTS // max(per_support, 1))
    supports = itertools.combinations(range(k), w)
    while True:
        chunk = list(itertools.islice(supports, step))
        if not chunk:
            return
        sup = np.array(chunk, dtype=np.int64)
        rows = G.a[sup]  # (S, w, n)
        if F.q == 2:
            words = np.bitwise_xor.reduce(rows, axis=1)[:, None, :]
        else:
            terms = F.mul(vals[None, :, :, None], rows[:, None, :, :])  # (S, V, w, n)
            words = F.sum(terms, axis=2)
        yield words.reshape(-1, n)


def systematic(G: Matrix) -> Matrix:
    return linalg.row_basis(G)


def min_distance(C: BlockCode, budget=None, use_cache=True, allow_bound=True) -> MinDistance:
    """Minimum nonzero weight of C.

    Exact when the weight-ordered enumeration closes within ``budget`` messages;
    otherwise a certified lower bound (``exact=False``) or BudgetExceeded when
    ``allow_bound`` is False.
    """
    if use_cache and C._d is not None and C._d.exact:
        return C._d
    res = _min_distance(C.G, budget or default_budget())
    if not res.exact and not allow_bound:
        raise BudgetExceeded(f"minimum distance of {C} needs more than the budget")
    if res.exact:
        C._d = res
    return res


def _min_distance(G: Matrix, budget: int) -> MinDistance:
    k = G.rows
    if k == 0:
        return MinDistance(None, True)
    S = systematic(G)
    q = G.field.q
    best = None
    spent = 0
    for w in range(1, k + 1):
        if best is not None and best <= w:
            return MinDistance(best, True, best)
        size = level_size(k, w, q)
        if spent + size > budget:
            lower = w if best is None else min(best, w)
            return MinDistance(lower, False, best)
        spent += size
        for words in iter_level(S, w):
            m = int(_weight(words).min())
            best = m if best is None else min(best, m)
    return MinDistance(best, True, best)


def min_weight_words(C: BlockCode, budget=None) -> tuple[int | None, np.ndarray]:
    """All minimum-weight codewords up to scalar multiples."""
    budget = budget or default_budget()
    md = min_distance(C, budget, allow_bound=False)
    if md.d is None:
        return None, np.zeros((0, C.n), dtype=np.int64)
    S = systematic(C.G)
    found = []
    spent = 0
    for w in range(1, min(md.d, C.k) + 1):
        spent += level_size(C.k, w, C.field.q)
        if spent > budget:
            raise BudgetExceeded("minimum-weight codeword listing exceeds the budget")
        for words in iter_level(S, w):
            found.append(words[_weight(words) == md.d])
    return md.d, np.vstack(found)


def weight_distribution(C: BlockCode, budget=None) -> np.ndarray:
    """A[w] = number of codewords of weight w (full enumeration)."""
    budget = budget or default_budget()
    q, k = C.field.q, C.k
    if q**k > budget:
        raise BudgetExceeded("weight distribution exceeds the budget")
    dist = np.zeros(C.n + 1, dtype=np.int64)
    dist[0] = 1
    S = systematic(C.G)
    for w in range(1, k + 1):
        for words in iter_level(S, w):
            dist += np.bincount(_weight(words), minlength=C.n + 1) * (q - 1)
    return dist


def even_odd_min_weights(C: BlockCode, budget=None) -> tuple[int | None, int | None]:
    """(minimum even-like weight, minimum odd-like weight); None when absent.

    Even-like means the coordinate sum is zero.
    """
    budget = budget or default_budget()
    F, k = C.field, C.k
    S = systematic(C.G)
    best = {True: None, False: None}
    spent = 0
    for w in range(1, k + 1):
        if all(b is not None and b <= w for b in best.values()):
            break
        spent += level_size(k, w, F.q)
        if spent > budget:
            raise BudgetExceeded("even/odd weight enumeration exceeds the budget")
        for words in iter_level(S, w):
            even = F.sum(words, axis=1) == 0
            wts = _weight(words)
            for flag in (True, False):
                sel = wts[even == flag]
                if len(sel):
                    m = int(sel.min())
                    cur = best[flag]
                    best[flag] = m if cur is None else min(cur, m)
    return best[True], best[False]


def codewords(C: BlockCode, budget=None) -> np.ndarray:
    """Every codeword (q^k rows); tests and oracles only."""
    budget = budget or default_budget()
    F, k = C.field, C.k
    if F.q**k > budget:
        raise BudgetExceeded("codeword listing exceeds the budget")
    msgs = np.array(list(itertools.product(range(F.q), repeat=k)), dtype=np.int64).reshape(-1, k)
    return linalg.matmul(F, msgs, C.G.a) if k else np.zeros((1, C.n), dtype=np.int64)


# ---------------------------------------------------------------------------
# transformations


def expand_vectors(rows, beta: Basis):
    """Coordinatewise expansion of vectors over ext into vectors over sub."""
    rows = np.asarray(rows, dtype=np.int64)
    out = expand_element(rows, beta)  # (..., n, m)
    return out.reshape(rows.shape[:-1] + (rows.shape[-1] * beta.degree,))


def expand_matrix_rows(M: Matrix, beta: Basis, multipliers=None) -> Matrix:
    """Rows expand(b * row) for every row and every multiplier b (row-major)."""
    ext = beta.ext
    if M.field != ext:
        raise ValueError(f"matrix over {M.field}, basis over {ext}")
    mult = np.array(multipliers if multipliers is not None else beta.elements, dtype=np.int64)
    scaled = ext.mul(M.a[:, None, :], mult[None, :, None])  # (r, m, n)
    out = expand_vectors(scaled, beta).reshape(M.rows * len(mult), -1)
    return Matrix(beta.sub, out)


def expand_code(C: BlockCode, beta: Basis) -> BlockCode:
    """q-ary image beta(C): an [mn, mk] code over the subfield."""
    if C.field != beta.ext:
        raise ValueError("basis does not belong to the code's field")
    relative_degree(beta.ext, beta.sub)
    return make_code(beta.sub, G=expand_matrix_rows(C.G, beta))


def puncture_code(C: BlockCode, i: int) -> BlockCode:
    """Delete coordinate i.  If the rank collapses the reduced basis is kept
    and ``k_loss`` records the drop."""
    G = linalg.delete_col(C.G, i)
    out = make_code(C.field, G=G)
    out.k_loss = C.k - out.k
    return out


def shorten_code(C: BlockCode, i: int) -> BlockCode:
    """Codewords vanishing at i, with coordinate i removed."""
    out = make_code(C.field, H=linalg.delete_col(C.H, i))
    out.k_loss = C.k - out.k
    return out


def extend_code(C: BlockCode) -> BlockCode:
    """Append x_{n+1} with x_1 + ... + x_{n+1} = 0."""
    return make_code(C.field, G=linalg.append_parity_col(C.G))


def _exact_d(C):
    return C._d.d if C._d is not None and C._d.exact else None


def direct_sum_code(C1: BlockCode, C2: BlockCode) -> BlockCode:
    out = make_code(C1.field, G=linalg.block_diag(C1.G, C2.G))
    d1, d2 = _exact_d(C1), _exact_d(C2)
    if d1 is not None and d2 is not None:
        out._d = MinDistance(min(d1, d2), True, min(d1, d2))
    return out


def uuv_code(C1: BlockCode, C2: BlockCode) -> BlockCode:
    """{(u, u + v) : u in C1, v in C2}."""
    if C1.n != C2.n:
        raise ValueError("(u|u+v) needs codes of equal length")
    Z = Matrix.zeros(C1.field, C2.k, C1.n)
    G = linalg.stack_v(linalg.stack_h(C1.G, C1.G), linalg.stack_h(Z, C2.G))
    out = make_code(C1.field, G=G)
    d1, d2 = _exact_d(C1), _exact_d(C2)
    if d1 is not None and d2 is not None:
        out._d = MinDistance(min(2 * d1, d2), True, min(2 * d1, d2))
    return out


def product_code(C1: BlockCode, C2: BlockCode) -> BlockCode:
    out = make_code(C1.field, G=linalg.kronecker(C1.G, C2.G))
    d1, d2 = _exact_d(C1), _exact_d(C2)
    if d1 is not None and d2 is not None:
        out._d = MinDistance(d1 * d2, True, d1 * d2)
    return out


def repetition_code(field: FieldCtx, n: int) -> BlockCode:
    return make_code(field, G=Matrix(field, np.ones((1, n), dtype=np.int64)))


def parity_code(field: FieldCtx, n: int) -> BlockCode:
    return make_code(field, H=Matrix(field, np.ones((1, n), dtype=np.int64)))


def hamming_code(r: int) -> BlockCode:
    """Binary [2^r - 1, 2^r - 1 - r, 3] code; column j of H is j + 1 in binary."""
    from .galois import field_create

    F = field_create(2)
    n = 2**r - 1
    H = np.array([[((j + 1) >> i) & 1 for j in range(n)] for i in range(r)], dtype=np.int64)
    return make_code(F, H=Matrix(F, H))


def random_code(field: FieldCtx, n: int, k: int, rng) -> BlockCode:
    return make_code(field, G=linalg.random_matrix(field, k, n, rng, full_rank=True))
