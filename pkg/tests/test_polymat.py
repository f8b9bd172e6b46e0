import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccode import polymat as pm
from ccode.galois import gf

polys = st.lists(st.integers(0, 4), min_size=0, max_size=6)


def P(F, *coeffs):
    return np.array(coeffs, dtype=np.int64) % F.q


def random_pmat(F, rng, k, n, max_deg):
    return [[pm.trim(rng.integers(0, F.q, size=max_deg + 1)) for _ in range(n)] for _ in range(k)]


def det_leibniz(F, M):
    """Determinant by the permutation expansion: the oracle for det_poly."""
    k = len(M)
    acc = pm.ZERO
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = np.array([1], dtype=np.int64)
        for i in range(k):
            term = pm.pmul(F, term, M[i][perm[i]])
        if inv % 2:
            term = pm.pscale(F, term, F.neg(1))
        acc = pm.padd(F, acc, term)
    return acc


def eq(a, b):
    return np.array_equal(pm.trim(a), pm.trim(b))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), polys, polys)
def test_division_identity(q, f, g):
    F = gf(q)
    f, g = pm.trim(np.array(f, dtype=np.int64) % q), pm.trim(np.array(g, dtype=np.int64) % q)
    if not len(g):
        return
    quot, rem = pm.pdivmod(F, f, g)
    assert eq(pm.padd(F, pm.pmul(F, quot, g), rem), f)
    assert pm.deg(rem) < pm.deg(g)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5]), polys, polys)
def test_gcd_divides_and_is_monic(q, f, g):
    F = gf(q)
    f, g = pm.trim(np.array(f, dtype=np.int64) % q), pm.trim(np.array(g, dtype=np.int64) % q)
    d = pm.pgcd(F, f, g)
    if not len(f) and not len(g):
        assert not len(d)
        return
    assert d[-1] == 1
    for h in (f, g):
        assert not len(pm.pdivmod(F, h, d)[1])


def test_examples_basic():
    F = gf(2)
    one, D = P(F, 1), P(F, 0, 1)
    assert eq(pm.minor_gcd(F, [[one, D]]), [1])
    g = pm.minor_gcd(F, [[D, P(F, 0, 0, 1)]])
    assert eq(g, [0, 1])


def test_examples_reduced():
    F = gf(2)
    coeffs = pm.to_dense([[P(F, 1), P(F, 0, 1)]])
    assert pm.leading_matrix(coeffs).tolist() == [[0, 1]]
    twin = pm.to_dense([[P(F, 0, 1), P(F, 1)], [P(F, 0, 1), P(F, 1)]])
    lead = pm.leading_matrix(twin)
    assert lead.tolist() == [[1, 0], [1, 0]]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 3), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_det_matches_leibniz(q, k, d, seed):
    F = gf(q)
    M = random_pmat(F, np.random.default_rng(seed), k, k, d)
    assert eq(pm.det_poly(F, M), det_leibniz(F, M))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(1, 3), st.integers(0, 3), st.integers(0, 2), st.integers(0, 2**32 - 1))
def test_hermite_gcd_matches_minor_enumeration(q, k, extra, d, seed):
    F = gf(q)
    n = k + extra
    M = random_pmat(F, np.random.default_rng(seed), k, n, d)
    g_enum, complete = pm.minors_gcd_enum(F, M)
    assert complete
    g = pm.minor_gcd(F, M)
    if len(g_enum):
        g_enum = pm.monic(F, g_enum)
    assert eq(g, g_enum)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_right_inverse_when_basic(q, k, extra, seed):
    F = gf(q)
    M = random_pmat(F, np.random.default_rng(seed), k, k + extra, 2)
    g = pm.minor_gcd(F, M)
    R = pm.right_inverse(F, M)
    if len(g) == 1:
        prod = pm.pmat_mul(F, M, R)
        for i in range(k):
            for j in range(k):
                assert eq(prod[i][j], [1] if i == j else [])
    else:
        assert R is None


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 2), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_kernel_basis_is_basic_and_annihilates(q, k, extra, seed):
    F = gf(q)
    M = random_pmat(F, np.random.default_rng(seed), k, k + extra, 2)
    if not len(pm.minor_gcd(F, M)):
        with pytest.raises(ValueError):
            pm.kernel_basis(F, M)
        return
    K = pm.kernel_basis(F, M)
    assert len(K) == extra
    KT = [[K[j][i] for j in range(len(K))] for i in range(k + extra)]
    for row in pm.pmat_mul(F, M, KT):
        assert all(not len(pm.trim(x)) for x in row)
    assert len(pm.minor_gcd(F, K)) == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_row_reduce_gives_minimal_basis(q, k, extra, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    M = random_pmat(F, rng, k, k + extra, 2)
    if len(pm.minor_gcd(F, M)) != 1:
        return
    dense = pm.to_dense(M, k, k + extra)
    R = pm.row_reduce(F, dense)
    from ccode.linalg import Matrix

    assert Matrix(F, pm.leading_matrix(R)).rank() == k
    # same module: R is basic and annihilated by the kernel of M
    Rn = pm.to_nested(R)
    assert len(pm.minor_gcd(F, Rn)) == 1
    if extra:
        K = pm.kernel_basis(F, M)
        KT = [[K[j][i] for j in range(len(K))] for i in range(k + extra)]
        for row in pm.pmat_mul(F, Rn, KT):
            assert all(not len(pm.trim(x)) for x in row)
    assert pm.row_degrees(R).sum() <= pm.row_degrees(dense).sum()


def test_dense_nested_roundtrip():
    F = gf(3)
    rng = np.random.default_rng(0)
    M = random_pmat(F, rng, 2, 3, 3)
    back = pm.to_nested(pm.to_dense(M))
    assert all(eq(a, b) for ra, rb in zip(M, back) for a, b in zip(ra, rb))
