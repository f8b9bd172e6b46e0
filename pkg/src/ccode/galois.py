"""Finite fields GF(p^m) with integer element encoding.

An element sum(c_i x^i) is encoded as the integer sum(c_i p^i).  Arithmetic is
table driven (log/exp for multiplication) and vectorised over numpy arrays, so
every operation accepts scalars or arrays of encodings.

Subfields are handled by an explicit embedding: the lexicographically least root
of the subfield's modulus inside the larger field fixes the map, which makes
traces and basis expansions reproducible.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

MAX_ORDER = 2**20


class FieldError(ValueError):
    """Invalid field parameters (non-prime characteristic, bad modulus, ...)."""


class FieldSizeError(FieldError):
    """Requested field exceeds the desk-scale cap."""


# ---------------------------------------------------------------------------
# GF(p)[x] helpers (lists of ints, low-to-high)


def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _pdivmod(f, g, p):
    f = _trim(f)
    g = _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g):
        shift = len(f) - len(g)
        c = f[-1] * inv_lead % p
        quot[shift] = c
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        f = _trim(f)
    return quot, f


def _pmulmod(f, g, mod, p):
    prod = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % p
    return _pdivmod(prod, mod, p)[1]


def _pgcd(f, g, p):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    return f


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, t) with q = p**t, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in prime_factors(q):
        t, r = 0, q
        while r % p == 0:
            r //= p
            t += 1
        if r == 1:
            return p, t
        break
    raise FieldError(f"{q} is not a prime power")


def is_irreducible(f, p: int) -> bool:
    """Ben-Or irreducibility test for a polynomial over GF(p)."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    h = [0, 1]
    for _ in range(m // 2):
        # h <- h^p mod f
        acc = [1]
        base = list(h)
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        h = acc
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, diff, p)) > 1:
            return False
    return True


def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m (by integer encoding)."""
    for code in range(p**m, 2 * p**m):
        coeffs = [(code // p**i) % p for i in range(m + 1)]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------


class FieldCtx:
    """The field GF(p^m) = GF(p)[x]/(modulus).

    Use :func:`field_create`; instances are cached and treated as immutable.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = tuple(modulus)
        self.q = p**m
        q = self.q
        idx = np.arange(q, dtype=np.int64)
        self.digits = np.stack([(idx // p**i) % p for i in range(m)], axis=1)
        self._weights = p ** np.arange(m, dtype=np.int64)
        self._neg = self._encode((-self.digits) % p)
        if p != 2 and q != p and q <= 1024:
            self._add_table = self._encode(
                (self.digits[:, None, :] + self.digits[None, :, :]) % p
            )
        else:
            self._add_table = None
        self.primitive_element = self._find_primitive()
        self._exp, self._log = self._build_logs()

    # -- representation helpers ------------------------------------------------

    def _encode(self, digits):
        return (np.asarray(digits, dtype=np.int64) * self._weights).sum(axis=-1)

    def _slow_mul(self, a: int, b: int) -> int:
        fa = [int(c) for c in self.digits[a]]
        fb = [int(c) for c in self.digits[b]]
        r = _pmulmod(fa, fb, list(self.modulus), self.p)
        return sum(c * self.p**i for i, c in enumerate(r))

    def _slow_pow(self, a: int, e: int) -> int:
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self._slow_mul(acc, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return acc

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)
        for g in range(2, q):
            if all(self._slow_pow(g, (q - 1) // r) != 1 for r in factors):
                return g
        raise FieldError("no primitive element found; modulus is not irreducible")

    def _build_logs(self):
        q, p, m = self.q, self.p, self.m
        g = self.primitive_element
        # multiplication by g as a GF(p)-linear map on digit vectors
        cols = [self.digits[self._slow_mul(g, p**i)] for i in range(m)]
        mat = np.stack(cols, axis=1)
        mul_g = self._encode((self.digits @ mat.T) % p).tolist()
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        e = 1
        for i in range(q - 1):
            exp[i] = e
            log[e] = i
            e = mul_g[e]
        if e != 1 or (log[1:] < 0).any():
            raise FieldError("modulus does not define a field")
        exp[q - 1 :] = exp[: q - 1]
        return exp, log

    # -- arithmetic ------------------------------------------------------------

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.q == self.p:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._encode((self.digits[a] + self.digits[b]) % self.p)

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.q)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
        out = np.where(a == 0, np.where(e == 0, 1, 0), out)
        return out

    def exp(self, i):
        """primitive_element ** i."""
        return self._exp[np.asarray(i, dtype=np.int64) % (self.q - 1)]

    def log(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ValueError("log of zero")
        return self._log[a]

    def sum(self, a, axis=-1):
        """Field sum along an axis."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.q == self.p:
            return a.sum(axis=axis) % self.p
        d = self.digits[a].sum(axis=axis if axis >= 0 else axis - 1) % self.p
        return self._encode(d)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        from math import gcd

        return (self.q - 1) // gcd(int(self._log[a]), self.q - 1)

    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def descriptor(self) -> str:
        return "field p=%d m=%d modulus=%s" % (
            self.p,
            self.m,
            ",".join(str(c) for c in self.modulus),
        )

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (field_create, (self.p, self.m, self.modulus))


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def field_create(p: int, m: int = 1, modulus=None) -> FieldCtx:
    """Create GF(p^m).

    Without an explicit modulus the least monic irreducible polynomial (by
    integer encoding) is used, so the same call always yields the same field.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise FieldSizeError(f"GF({p}^{m}) exceeds the cap of {MAX_ORDER} elements")
    if modulus is None:
        modulus = least_irreducible(p, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if any(not 0 <= c < p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    return _field_cached(p, m, tuple(modulus))


def gf(q: int) -> FieldCtx:
    """Canonical GF(q) for a prime power q."""
    p, t = prime_power(q)
    return field_create(p, t)


# ---------------------------------------------------------------------------
# subfields


class Embedding:
    """Field monomorphism sub -> ext fixed by the least root of sub.modulus."""

    def __init__(self, sub: FieldCtx, ext: FieldCtx):
        if sub.p != ext.p or ext.m % sub.m:
            raise FieldError(f"{sub} is not a subfield of {ext}")
        self.sub, self.ext = sub, ext
        els = ext.elements()
        val = np.zeros_like(els)
        for c in reversed(sub.modulus):
            val = ext.add(ext.mul(val, els), c)
        roots = np.flatnonzero(val == 0)
        if not len(roots):
            raise FieldError(f"{sub.modulus} has no root in {ext}")
        self.root = int(roots[0])
        powers = ext.pow(self.root, np.arange(sub.m))
        image = np.zeros(sub.q, dtype=np.int64)
        for i in range(sub.m):
            image = ext.add(image, ext.mul(sub.digits[:, i], powers[i]))
        self.image = image
        self.preimage = np.full(ext.q, -1, dtype=np.int64)
        self.preimage[image] = np.arange(sub.q)

    def __call__(self, a):
        return self.image[np.asarray(a, dtype=np.int64)]

    def pull(self, a):
        """Inverse map; raises if an element lies outside the subfield."""
        out = self.preimage[np.asarray(a, dtype=np.int64)]
        if (out < 0).any():
            raise FieldError("element is not in the subfield")
        return out


@functools.lru_cache(maxsize=None)
def embedding(sub: FieldCtx, ext: FieldCtx) -> Embedding:
    return Embedding(sub, ext)


def relative_degree(ext: FieldCtx, sub: FieldCtx) -> int:
    if sub.p != ext.p or ext.m % sub.m:
        raise FieldError(f"{sub} is not a subfield of {ext}")
    return ext.m // sub.m


def trace(ext: FieldCtx, a, sub: FieldCtx):
    """Relative trace tr_{ext/sub}(a) = sum a^(Q^i), returned in sub's encoding."""
    d = relative_degree(ext, sub)
    a = np.asarray(a, dtype=np.int64)
    acc = np.zeros_like(a)
    term = a
    for _ in range(d):
        acc = ext.add(acc, term)
        term = ext.pow(term, sub.q)
    return embedding(sub, ext).pull(acc)


@dataclass(frozen=True, eq=False)
class Basis:
    """Basis (b_1..b_m) of ext over sub, elements encoded in ext."""

    ext: FieldCtx
    sub: FieldCtx
    elements: tuple[int, ...]

    def __post_init__(self):
        d = relative_degree(self.ext, self.sub)
        object.__setattr__(self, "elements", tuple(int(b) for b in self.elements))
        if len(self.elements) != d:
            raise FieldError(f"a basis of {self.ext} over {self.sub} needs {d} elements")
        if self.gram().rank() != d:
            raise FieldError("elements are linearly dependent over the subfield")

    @property
    def degree(self) -> int:
        return len(self.elements)

    def gram(self):
        """Trace Gram matrix tr(b_i b_j) over the subfield."""
        from .linalg import Matrix

        b = np.array(self.elements, dtype=np.int64)
        prods = self.ext.mul(b[:, None], b[None, :])
        return Matrix(self.sub, trace(self.ext, prods, self.sub))

    def dual(self) -> "Basis":
        return dual_basis(self)

    def expand(self, a):
        """Coordinates of a (array, shape S) as array of shape S + (m,) over sub."""
        return expand_element(a, self)

    def fold(self, coeffs):
        return fold_element(coeffs, self)

    def __eq__(self, other):
        return (
            isinstance(other, Basis)
            and self.ext == other.ext
            and self.sub == other.sub
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ext, self.sub, self.elements))


@functools.lru_cache(maxsize=None)
def dual_basis(beta: Basis) -> Basis:
    """The basis b*_j with tr(b_i b*_j) = delta_ij."""
    ext, sub = beta.ext, beta.sub
    inv = beta.gram().inverse()
    emb = embedding(sub, ext)
    b = np.array(beta.elements, dtype=np.int64)
    duals = []
    for j in range(beta.degree):
        coeffs = emb(inv.a[:, j])
        duals.append(int(ext.sum(ext.mul(coeffs, b), axis=0)))
    out = Basis(ext, sub, tuple(duals))
    check = ext.mul(b[:, None], np.array(out.elements)[None, :])
    if not np.array_equal(trace(ext, check, sub), np.eye(beta.degree, dtype=np.int64)):
        raise AssertionError("dual basis failed the trace check")
    return out


def expand_element(a, beta: Basis):
    """c_j = tr(a b*_j), so that a = sum c_j b_j."""
    ext, sub = beta.ext, beta.sub
    a = np.asarray(a, dtype=np.int64)
    dual = np.array(dual_basis(beta).elements, dtype=np.int64)
    return trace(ext, ext.mul(a[..., None], dual), sub)


def fold_element(coeffs, beta: Basis):
    ext = beta.ext
    coeffs = np.asarray(coeffs, dtype=np.int64)
    lifted = embedding(beta.sub, ext)(coeffs)
    return ext.sum(ext.mul(lifted, np.array(beta.elements, dtype=np.int64)), axis=-1)


def canonical_basis(ext: FieldCtx, sub: FieldCtx) -> Basis:
    """{1, x, x^2, ...}, x the class of the indeterminate in ext."""
    d = relative_degree(ext, sub)
    x = ext.p if ext.m > 1 else 1
    if ext.m == 1:
        return Basis(ext, sub, (1,))
    return Basis(ext, sub, tuple(int(v) for v in ext.pow(x, np.arange(d))))


def self_dual_basis(ext: FieldCtx, sub: FieldCtx) -> Basis:
    """Least self-dual basis by backtracking, or FieldError if none exists."""
    d = relative_degree(ext, sub)
    els = ext.elements()[1:]
    norms = trace(ext, ext.mul(els, els), sub)
    cands = [int(e) for e, t in zip(els, norms) if t == 1]
    if not cands:
        raise FieldError(f"{ext} has no self-dual basis over {sub}")
    cand_arr = np.array(cands, dtype=np.int64)
    inner = trace(ext, ext.mul(cand_arr[:, None], cand_arr[None, :]), sub)

    def search(chosen, start):
        if len(chosen) == d:
            return chosen
        for i in range(start, len(cands)):
            if all(inner[i, j] == 0 for j in chosen):
                found = search(chosen + [i], i + 1)
                if found:
                    return found
        return None

    picked = search([], 0)
    if picked is None:
        raise FieldError(f"{ext} has no self-dual basis over {sub}")
    return Basis(ext, sub, tuple(cands[i] for i in picked))


def random_basis(ext: FieldCtx, sub: FieldCtx, rng) -> Basis:
    d = relative_degree(ext, sub)
    while True:
        els = tuple(int(v) for v in rng.integers(1, ext.q, size=d))
        try:
            return Basis(ext, sub, els)
        except FieldError:
            continue


def all_bases(ext: FieldCtx, sub: FieldCtx):
    """Iterate over all ordered bases (small fields only)."""
    d = relative_degree(ext, sub)
    for els in itertools.permutations(range(1, ext.q), d):
        try:
            yield Basis(ext, sub, els)
        except FieldError:
            continue
