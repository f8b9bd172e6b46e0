"""Convolutional codes from split parity-check matrices.

A parity-check matrix H of a block code C is cut into blocks H_0, ..., H_mu.
Padding every block with zero rows to the size of H_0 gives the coefficient
matrices of G(D) = H~_0 + H~_1 D + ... + H~_mu D^mu.  Because the rows of
G(D) are (placements of) distinct rows of a full-rank matrix, G(D) is basic
and reduced; this module certifies that per instance instead of assuming it.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg, polymat
from .blockcode import BlockCode, MinDistance, make_code, min_distance, default_budget
from .galois import FieldCtx
from .linalg import Matrix

DEFAULT_STATE_CAP = 2**16
DEFAULT_BRANCH_CAP = 2**16


class SplitError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SplitSpec:
    """Padded coefficient blocks of a split of ``source``'s parity-check matrix.

    kind is "parity" when the blocks come from a parity-check matrix of a code C
    (then source is C) and "generator" when they come from a generator matrix
    of C (then source is the dual of C).
    """

    source: BlockCode
    padded: tuple[Matrix, ...]
    kind: str = "parity"

    def __post_init__(self):
        if self.kind not in ("parity", "generator"):
            raise SplitError(f"unknown split kind {self.kind!r}")
        if not self.padded:
            raise SplitError("a split needs at least one block")
        shapes = {b.shape for b in self.padded}
        if len(shapes) != 1:
            raise SplitError("padded blocks must share one shape")
        kappa, n = self.padded[0].shape
        if n != self.source.n:
            raise SplitError("block width differs from the code length")
        H0 = self.padded[0]
        if not H0.a.any(axis=1).all():
            raise SplitError("H_0 must not contain zero rows")
        stacked = linalg.stack_v(*[b.nonzero_rows() for b in self.padded])
        if stacked.rows != self.source.H.rows:
            raise SplitError("blocks do not add up to the parity-check rows")
        if stacked.rank() != stacked.rows or not linalg.same_row_space(stacked, self.source.H):
            raise SplitError("stacked blocks are not a parity-check matrix of the source")
        for i, r in enumerate(self.ranks):
            if r > self.kappa:
                raise SplitError(f"rank H_{i} = {r} exceeds rank H_0 = {self.kappa}")

    @property
    def field(self):
        return self.source.field

    @property
    def kappa(self) -> int:
        return self.padded[0].rows

    @property
    def blocks(self) -> tuple[Matrix, ...]:
        return tuple(b.nonzero_rows() for b in self.padded)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(b.rows for b in self.blocks)

    @property
    def mu(self) -> int:
        return max(i for i, r in enumerate(self.ranks) if r)

    def stacked(self) -> Matrix:
        return linalg.stack_v(*self.blocks)

    @property
    def dual_source(self) -> BlockCode:
        """C^perp: the code whose minimum distance bounds d_f from below."""
        return self.source.dual()


def _cut(M: Matrix, row_counts) -> list[Matrix]:
    row_counts = [int(r) for r in row_counts]
    if not row_counts or any(r < 0 for r in row_counts):
        raise SplitError("row counts must be nonnegative and nonempty")
    if sum(row_counts) != M.rows:
        raise SplitError(f"row counts sum to {sum(row_counts)}, matrix has {M.rows} rows")
    if row_counts[0] == 0:
        raise SplitError("H_0 must have at least one row")
    out, start = [], 0
    for r in row_counts:
        out.append(Matrix(M.field, M.a[start : start + r].reshape(r, M.cols)))
        start += r
    return out


def _pad_all(blocks) -> tuple[Matrix, ...]:
    kappa = blocks[0].rows
    for i, b in enumerate(blocks):
        if b.rows > kappa:
            raise SplitError(f"rank H_{i} = {b.rows} exceeds rank H_0 = {kappa}")
    while len(blocks) > 1 and blocks[-1].rows == 0:
        blocks = blocks[:-1]
    return tuple(linalg.pad_rows(b, kappa) for b in blocks)


def split_parity(C: BlockCode, row_counts) -> SplitSpec:
    """Cut H top-down into blocks of the given sizes."""
    return SplitSpec(C, _pad_all(_cut(C.H, row_counts)), "parity")


def split_generator(C: BlockCode, row_counts) -> SplitSpec:
    """Cut G top-down; the resulting code is built from G instead of H."""
    return SplitSpec(C.dual(), _pad_all(_cut(C.G, row_counts)), "generator")


def split_from_padded(field: FieldCtx, padded, kind="parity") -> SplitSpec:
    """Rebuild a split whose source is spanned by the nonzero rows of the blocks."""
    padded = tuple(p if isinstance(p, Matrix) else Matrix(field, p) for p in padded)
    stacked = linalg.stack_v(*[p.nonzero_rows() for p in padded])
    return SplitSpec(make_code(field, H=stacked), padded, kind)


# ---------------------------------------------------------------------------


class ConvCode:
    """Polynomial generator matrix G(D) = sum_j coeffs[j] D^j (k x n)."""

    def __init__(self, field: FieldCtx, coeffs, split: SplitSpec | None = None, provenance=()):
        arr = np.array(coeffs, dtype=np.int64)
        if arr.ndim != 3:
            raise ValueError("coefficients must have shape (mu + 1, k, n)")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError("coefficient entries out of range")
        last = max([j for j in range(arr.shape[0]) if arr[j].any()] + [0])
        arr = arr[: last + 1]
        arr.setflags(write=False)
        self.field = field
        self.coeffs = arr
        self.split = split
        self.provenance = tuple(provenance)
        self._cache = {}

    @property
    def n(self) -> int:
        return self.coeffs.shape[2]

    @property
    def k(self) -> int:
        return self.coeffs.shape[1]

    @property
    def kind(self):
        return self.split.kind if self.split else None

    @property
    def row_degrees(self) -> np.ndarray:
        return polymat.row_degrees(self.coeffs)

    @property
    def delta(self) -> int:
        return int(self.row_degrees.clip(min=0).sum())

    @property
    def mu(self) -> int:
        return int(self.row_degrees.max()) if self.k else 0

    def coeff(self, j: int) -> Matrix:
        if j >= self.coeffs.shape[0]:
            return Matrix.zeros(self.field, self.k, self.n)
        return Matrix(self.field, self.coeffs[j])

    def nested(self):
        return polymat.to_nested(self.coeffs)

    def params(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.delta, self.mu)

    def __repr__(self):
        n, k, d, m = self.params()
        return f"ConvCode({n}, {k}, {d}; {m})_{self.field.q}"

    def __eq__(self, other):
        return (
            isinstance(other, ConvCode)
            and self.field == other.field
            and self.coeffs.shape == other.coeffs.shape
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.field, self.coeffs.shape, self.coeffs.tobytes()))


# ---------------------------------------------------------------------------
# certification


@dataclass
class Certificate:
    basic: bool
    reduced: bool
    gcd: tuple[int, ...]  # monic gcd of the k x k minors, low to high
    row_degrees: tuple[int, ...]
    delta: int
    mu: int
    right_inverse: list | None = None


def is_basic(V: ConvCode) -> tuple[bool, np.ndarray]:
    """(basic?, monic gcd of all k x k minors).

    The gcd is read off a column Hermite form G U = [L 0] (U unimodular), which
    is exact at any size, so there is no undetermined outcome.
    """
    if "gcd" not in V._cache:
        V._cache["gcd"] = polymat.minor_gcd(V.field, V.nested())
    g = V._cache["gcd"]
    return len(g) == 1, g


def is_reduced(V: ConvCode) -> bool:
    if V.k == 0:
        return True
    return linalg.rank(Matrix(V.field, polymat.leading_matrix(V.coeffs))) == V.k


def degree_of(V: ConvCode):
    return V.delta, V.mu, tuple(int(d) for d in V.row_degrees)


def certify(V: ConvCode, with_inverse=False) -> Certificate:
    basic, g = is_basic(V)
    inv = polymat.right_inverse(V.field, V.nested()) if (with_inverse and basic) else None
    delta, mu, degs = degree_of(V)
    return Certificate(basic, is_reduced(V), tuple(int(c) for c in g), degs, delta, mu, inv)


def conv_from_split(S: SplitSpec, provenance=()) -> ConvCode:
    coeffs = np.stack([b.a for b in S.padded])
    V = ConvCode(S.field, coeffs, S, provenance or (f"split:{S.kind}",))
    basic, _ = is_basic(V)
    if not basic or not is_reduced(V):
        raise AssertionError(f"split-built generator failed certification: basic={basic}")
    return V


def dual_conv(V: ConvCode) -> ConvCode:
    """Reduced basic generator matrix of the dual code {v : v G(D)^T = 0}."""
    if "dual" not in V._cache:
        if V.k == V.n:
            coeffs = np.zeros((1, 0, V.n), dtype=np.int64)
        else:
            rows = polymat.kernel_basis(V.field, V.nested())
            dense = polymat.to_dense(rows, V.n - V.k, V.n)
            coeffs = polymat.row_reduce(V.field, dense)
        V._cache["dual"] = ConvCode(V.field, coeffs, provenance=V.provenance + ("dual",))
    return V._cache["dual"]


# ---------------------------------------------------------------------------
# free distance


@dataclass
class DistanceResult:
    lower: int | None
    upper: int | None
    stats: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    @property
    def value(self):
        return self.lower if self.exact else None

    @property
    def mode(self) -> str:
        return "exact" if self.exact else "bracket"

    def __post_init__(self):
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise AssertionError(f"bracket lower {self.lower} > upper {self.upper}")


def _all_vectors(q: int, k: int) -> np.ndarray:
    """All of GF(q)^k in index order (index = sum u_i q^i)."""
    idx = np.arange(q**k, dtype=np.int64)
    return (idx[:, None] // q ** np.arange(k, dtype=np.int64)) % q


class EncoderTrellis:
    """Minimal encoder state graph: row i keeps its last deg_i inputs.

    State digit (i, j) for j = 1..deg_i is u_i(t - j); the state index is the
    base-q number of the digits, so there are q^delta states.
    """

    def __init__(self, V: ConvCode):
        F, q, k = V.field, V.field.q, V.k
        degs = V.row_degrees.clip(min=0)
        self.V, self.q = V, q
        self.delta = int(degs.sum())
        self.offsets = np.concatenate([[0], np.cumsum(degs)[:-1]]).astype(np.int64)
        slots = [(i, j) for i in range(k) for j in range(1, degs[i] + 1)]
        self.gmem = np.array([V.coeffs[j, i] for i, j in slots], dtype=np.int64).reshape(-1, V.n)
        self.pw = q ** np.arange(self.delta, dtype=np.int64)
        # slot s receives the digit of slot src[s] when shifting (-1: new input)
        self.src = np.array([-1 if j == 1 else s - 1 for s, (i, j) in enumerate(slots)], dtype=np.int64)
        self.inputs = _all_vectors(q, k)
        self.out0 = linalg.matmul(F, self.inputs, V.coeffs[0]) if k else np.zeros((1, V.n), np.int64)
        first = [self.offsets[i] for i in range(k) if degs[i] >= 1]
        rows = [i for i in range(k) if degs[i] >= 1]
        self.inpart = (self.inputs[:, rows] * self.pw[first]).sum(axis=1) if rows else np.zeros(
            len(self.inputs), dtype=np.int64
        )

    @property
    def states(self) -> int:
        return self.q**self.delta

    def digits(self, s: int) -> np.ndarray:
        return (s // self.pw) % self.q

    def expand(self, s: int):
        """(weights, next states) for every input from state s."""
        F = self.V.field
        d = self.digits(s)
        contrib = linalg.matmul(F, d[None, :], self.gmem)[0] if self.delta else 0
        out = F.add(self.out0, contrib) if self.delta else self.out0
        w = np.count_nonzero(out, axis=1)
        keep = self.src >= 0
        shifted = int((d[self.src[keep]] * self.pw[keep]).sum()) if self.delta else 0
        return w, shifted + self.inpart


def _dijkstra(start_edges, expand, state_cap):
    """Lightest path that leaves state 0 and returns to it.

    start_edges: (weights, next) for the first step; expand(s) -> (weights, next).
    Returns (value or None, lower bound, settled count).
    """
    heap = []
    best = {}
    w0, nx0 = start_edges
    for w, s in zip(w0.tolist(), nx0.tolist()):
        if s == 0:
            heapq.heappush(heap, (w, 0, -1))
        elif w < best.get(s, 1 << 62):
            best[s] = w
            heapq.heappush(heap, (w, 1, s))
    settled = set()
    while heap:
        w, tag, s = heapq.heappop(heap)
        if tag == 0:
            return w, w, len(settled)
        if s in settled:
            continue
        if len(settled) >= state_cap:
            return None, w, len(settled)
        settled.add(s)
        ws, nxs = expand(s)
        tot = ws + w
        for t, s2 in zip(tot.tolist(), nxs.tolist()):
            if s2 == 0:
                heapq.heappush(heap, (t, 0, -1))
            elif s2 not in settled and t < best.get(s2, 1 << 62):
                best[s2] = t
                heapq.heappush(heap, (t, 1, s2))
    return None, None, len(settled)


def _block_distance(G: Matrix, budget) -> MinDistance:
    return min_distance(make_code(G.field, G=G), budget)


def free_distance(
    V: ConvCode,
    state_cap=DEFAULT_STATE_CAP,
    branch_cap=DEFAULT_BRANCH_CAP,
    horizon=None,
    budget=None,
) -> DistanceResult:
    """d_f by lowest-weight-first search on the encoder state graph.

    When the search is cut off the result is a bracket: the lower end is the
    larger of the search frontier and d(C^perp) for split-built codes, the
    upper end the lightest codeword seen among short inputs.
    """
    key = ("df", state_cap, branch_cap, horizon, budget)
    if key in V._cache:
        return V._cache[key]
    budget = budget or default_budget()
    stats = {}
    if V.k == 0:
        res = DistanceResult(None, None, {"empty": True})
    elif V.mu == 0:
        md = _block_distance(V.coeff(0), budget)
        res = DistanceResult(md.d, md.d if md.exact else md.upper, {"method": "block"})
    else:
        lower = upper = None
        T = EncoderTrellis(V)
        stats["states"] = T.states
        if V.field.q**V.k <= branch_cap:
            w0, nx0 = T.out0, T.inpart
            nzi = np.arange(1, len(w0))
            start = (np.count_nonzero(w0[nzi], axis=1), nx0[nzi])
            val, lo, settled = _dijkstra(start, T.expand, state_cap)
            stats["settled"] = settled
            if val is not None:
                lower = upper = val
            else:
                lower = lo
        if lower != upper or lower is None:
            if V.split is not None:
                dp = min_distance(V.split.dual_source, budget)
                if dp.d is not None:
                    lower = max(lower or 0, dp.d)
            h = horizon if horizon is not None else 2 * T.states
            up = upper_by_inputs(V, h, budget)
            stats["horizon_used"] = up[1]
            upper = up[0] if upper is None else min(upper, up[0])
            if lower is None:
                lower = 1
        res = DistanceResult(lower, upper, stats)
    V._cache[key] = res
    return res


def upper_by_inputs(V: ConvCode, horizon: int, budget: int):
    """Lightest codeword over inputs of degree <= h, h <= horizon clipped to the
    budget.  Single rows of G(D) are always included.  Returns (weight, h)."""
    F, q, k = V.field, V.field.q, V.k
    rows = V.coeffs.transpose(1, 0, 2)  # (k, L, n)
    best = int(np.count_nonzero(rows, axis=(1, 2)).min())
    h = -1
    while h + 1 <= horizon and q ** (k * (h + 2)) <= budget:
        h += 1
    if h >= 0:
        L = V.coeffs.shape[0]
        T = h + L
        # generator of the truncated block code: shifted copies of each row
        blocks = []
        for t in range(h + 1):
            blk = np.zeros((k, T, V.n), dtype=np.int64)
            blk[:, t : t + L] = rows
            blocks.append(blk.reshape(k, T * V.n))
        G = Matrix(F, np.vstack(blocks))
        md = min_distance(make_code(F, G=G), budget)
        if md.upper is not None:
            best = min(best, md.upper)
    return best, h


# ---------------------------------------------------------------------------
# oracles used by tests and the acceptance suite


def unrolled_min_weight(V: ConvCode, degree: int) -> int | None:
    """Minimum weight over nonzero inputs of degree <= ``degree``, computed by
    a time-indexed dynamic program over encoder states (no priority queue)."""
    if V.k == 0:
        return None
    T = EncoderTrellis(V)
    S = T.states
    INF = np.iinfo(np.int64).max // 4
    cur = np.full(S, INF, dtype=np.int64)
    w0, nx0 = T.out0, T.inpart
    best = INF
    for u in range(1, len(w0)):
        w = int(np.count_nonzero(w0[u]))
        if nx0[u] == 0:
            best = min(best, w)
        else:
            cur[nx0[u]] = min(cur[nx0[u]], w)
    table = [T.expand(s) for s in range(S)]
    for t in range(1, degree + V.mu + 1):
        allow_input = t <= degree
        nxt = np.full(S, INF, dtype=np.int64)
        for s in np.flatnonzero(cur < INF):
            ws, nxs = table[s]
            if not allow_input:
                ws, nxs = ws[:1], nxs[:1]
            tot = ws + cur[s]
            hit = nxs == 0
            if hit.any():
                best = min(best, int(tot[hit].min()))
            live = ~hit
            np.minimum.at(nxt, nxs[live], tot[live])
        cur = nxt
    return int(best) if best < INF else None


def enumerate_min_weight(V: ConvCode, degree: int) -> int | None:
    """Literal enumeration of u(D) G(D) over all inputs of degree <= degree."""
    F, q, k = V.field, V.field.q, V.k
    L = V.coeffs.shape[0]
    best = None
    for flat in itertools.product(range(q), repeat=k * (degree + 1)):
        if not any(flat):
            continue
        u = np.array(flat, dtype=np.int64).reshape(degree + 1, k)
        out = np.zeros((degree + L, V.n), dtype=np.int64)
        for t in range(degree + 1):
            for j in range(L):
                out[t + j] = F.add(out[t + j], linalg.matmul(F, u[t][None, :], V.coeffs[j])[0])
        w = int(np.count_nonzero(out))
        best = w if best is None else min(best, w)
    return best


# ---------------------------------------------------------------------------
# dual free distance by a syndrome trellis


class SyndromeTrellis:
    """Trellis of {v(D) : v(D) G(D)^T = 0} on pending parity-check sums.

    After v_t the state holds P_j = sum_{l >= j} v_{t+j-l} G_l^T, j = 1..mu.
    A step with v requires v G_0^T = -P_1 and moves to P'_j = P_{j+1} + v G_j^T.
    The cheapest v for a given syndrome is a coset leader of the row space of
    M = [G_0; ...; G_mu] seen through v -> v M^T.
    """

    def __init__(self, V: ConvCode, max_syndromes=2**20):
        F, q, k, mu = V.field, V.field.q, V.k, V.mu
        self.V, self.q, self.k, self.mu = V, q, k, mu
        M = Matrix(F, V.coeffs[: mu + 1].reshape((mu + 1) * k, V.n))
        self.M = M
        R, r, piv = linalg.rref(M.T)  # image of v -> v M^T is the row space of M^T
        self.r = r
        if q**r > max_syndromes:
            raise MemoryError(f"{q**r} syndromes exceed the cap")
        basis = R.a[:r]
        coords = _all_vectors(q, r)  # syndrome coordinates at the pivots
        self.syn = linalg.matmul(F, coords, basis) if r else np.zeros((1, M.rows), np.int64)
        self.leader = self._leaders(M.T.a, piv, coords)
        self.kpw = q ** np.arange(k * mu, dtype=np.int64)
        first = self.syn[:, :k]
        fk = (first * q ** np.arange(k, dtype=np.int64)).sum(axis=1)
        order = np.argsort(fk, kind="stable")
        self.groups = {}
        for key, idx in itertools.groupby(order.tolist(), key=lambda i: int(fk[i])):
            self.groups[key] = np.array(list(idx), dtype=np.int64)
        self.rest = self.syn[:, k:]
        self.rest_idx = (self.rest * self.kpw).sum(axis=1)

    def _leaders(self, cols, piv, coords):
        """Minimum weight of v with v M^T = s, for every syndrome s in the image."""
        F, q, r = self.V.field, self.q, self.r
        size = q**r
        pw = q ** np.arange(r, dtype=np.int64)
        gens = []
        for row in cols:  # row i of M^T = contribution of coordinate i
            for c in range(1, q):
                g = F.mul(row[list(piv)], c)
                gens.append(g)
        gens = np.unique(np.array(gens, dtype=np.int64).reshape(-1, r), axis=0)
        dist = np.full(size, -1, dtype=np.int64)
        dist[0] = 0
        frontier = np.array([0], dtype=np.int64)
        level = 0
        while len(frontier):
            level += 1
            fd = coords[frontier]
            sums = F.add(fd[:, None, :], gens[None, :, :]).reshape(-1, r)
            idx = np.unique((sums * pw).sum(axis=1))
            new = idx[dist[idx] < 0]
            dist[new] = level
            frontier = new
        return dist

    def _state_digits(self, s: int) -> np.ndarray:
        return (s // self.kpw) % self.q

    def expand(self, s: int):
        F, k, q = self.V.field, self.k, self.q
        d = self._state_digits(s)
        p1 = d[:k]
        target = F.neg(p1)
        key = int((target * q ** np.arange(k, dtype=np.int64)).sum())
        idx = self.groups.get(key)
        if idx is None:
            return np.zeros(0, np.int64), np.zeros(0, np.int64)
        shifted = np.concatenate([d[k:], np.zeros(k, dtype=np.int64)])
        nxt = F.add(shifted[None, :], self.rest[idx])
        return self.leader[idx], (nxt * self.kpw).sum(axis=1)


def dual_free_distance(V: ConvCode, state_cap=DEFAULT_STATE_CAP, budget=None) -> DistanceResult:
    """Free distance of the dual code V^perp without enumerating its inputs."""
    key = ("dual_df", state_cap, budget)
    if key in V._cache:
        return V._cache[key]
    budget = budget or default_budget()
    if V.k == V.n:
        res = DistanceResult(None, None, {"empty": True})
        V._cache[key] = res
        return res
    if V.k == 0:
        res = DistanceResult(1, 1, {"method": "full-space"})
        V._cache[key] = res
        return res
    T = SyndromeTrellis(V)
    # words that never touch the state: single-step v with v M^T = 0
    K = make_code(V.field, H=T.M) if T.M.rows else None
    zero_step = min_distance(K, budget) if K is not None and K.k else MinDistance(None, True)
    idx0 = T.groups.get(0, np.zeros(0, np.int64))
    idx0 = idx0[idx0 != 0]
    start = (T.leader[idx0], T.rest_idx[idx0])
    val, lo, settled = _dijkstra(start, T.expand, state_cap) if len(idx0) else (None, None, 0)
    stats = {"syndromes": int(T.q**T.r), "settled": settled}
    cands = [x for x in (val, zero_step.d if zero_step.exact else None) if x is not None]
    if (val is not None or not len(idx0)) and zero_step.exact:
        d = min(cands) if cands else None
        res = DistanceResult(d, d, stats)
    else:
        lows = [x for x in (lo, zero_step.d) if x is not None]
        ups = [x for x in (val, zero_step.upper) if x is not None]
        lower = min(lows) if lows else 1
        upper = min(ups) if ups else None
        if upper is None:
            dual = dual_conv(V)
            rows = dual.coeffs.transpose(1, 0, 2)
            upper = int(np.count_nonzero(rows, axis=(1, 2)).min())
        res = DistanceResult(min(lower, upper), upper, stats)
    V._cache[key] = res
    return res


# ---------------------------------------------------------------------------
# distance bounds attached to a split


@dataclass
class SplitBounds:
    df_lower: MinDistance  # d(C^perp): d_f >= this
    d: MinDistance  # d(C): upper end of the dual window
    d0: MinDistance
    dmu: MinDistance

    @property
    def window(self) -> tuple[int | None, int | None]:
        """[min(d_0 + d_mu, d), d] for the dual free distance."""
        if self.d.d is None:
            return None, None
        lo_parts = [self.d0.d, self.dmu.d]
        if any(x is None for x in lo_parts):
            return self.d.d, self.d.upper
        return min(self.d0.d + self.dmu.d, self.d.d), self.d.upper if not self.d.exact else self.d.d

    @property
    def exact(self) -> bool:
        return all(x.exact for x in (self.df_lower, self.d, self.d0, self.dmu))


def split_bounds(S: SplitSpec, budget=None) -> SplitBounds:
    F = S.field
    blocks = S.blocks
    d0 = min_distance(make_code(F, H=blocks[0]), budget)
    last = blocks[S.mu]
    dmu = min_distance(make_code(F, H=last), budget) if last.rows else MinDistance(1, True, 1)
    return SplitBounds(
        df_lower=min_distance(S.dual_source, budget),
        d=min_distance(S.source, budget),
        d0=d0,
        dmu=dmu,
    )
