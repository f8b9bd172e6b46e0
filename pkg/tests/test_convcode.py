import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _helpers import split_or_reject, top_aligned_delta
from ccode import polymat
from ccode.blockcode import hamming_code, make_code, min_distance
from ccode.convcode import (
    ConvCode,
    EncoderTrellis,
    SplitError,
    certify,
    conv_from_split,
    dual_conv,
    dual_free_distance,
    enumerate_min_weight,
    free_distance,
    is_basic,
    is_reduced,
    split_from_padded,
    split_generator,
    split_parity,
    split_bounds,
    unrolled_min_weight,
)
from ccode.families import melas_code
from ccode.galois import gf
from ccode.linalg import Matrix


def conv(q, coeffs):
    return ConvCode(gf(q), np.array(coeffs, dtype=np.int64))


@pytest.fixture(scope="module")
def melas_v():
    C = melas_code(4, 2)
    return conv_from_split(split_parity(C, C.split_hint))


# -- splits ------------------------------------------------------------------------


def test_melas_split_ranks(melas_v):
    S = melas_v.split
    assert S.kappa == 2 and S.ranks == (2, 2)


def test_hamming_split():
    S = split_parity(hamming_code(3), (2, 1))
    assert S.kappa == 2 and S.ranks == (2, 1)
    V = conv_from_split(S)
    assert V.params() == (7, 2, 1, 1)


def test_single_block_is_block_code():
    C = hamming_code(3)
    V = conv_from_split(split_parity(C, (3,)))
    assert V.params() == (7, 3, 0, 0)
    assert free_distance(V).value == min_distance(C.dual()).d


def test_split_rejects_bad_counts():
    C = hamming_code(3)
    with pytest.raises(SplitError):
        split_parity(C, (1, 2))  # rank H_1 > rank H_0
    with pytest.raises(SplitError):
        split_parity(C, (2, 2))
    with pytest.raises(SplitError):
        split_parity(C, (0, 3))


def test_split_rejects_zero_row_in_h0():
    F = gf(2)
    with pytest.raises(SplitError):
        split_from_padded(F, [Matrix(F, [[1, 1, 0], [0, 0, 0]]), Matrix(F, [[0, 1, 1], [0, 0, 0]])])


def test_split_rejects_dependent_rows():
    F = gf(2)
    with pytest.raises(SplitError):
        split_from_padded(F, [Matrix(F, [[1, 1, 0]]), Matrix(F, [[1, 1, 0]])])


# -- certification --------------------------------------------------------------------


def test_basic_examples():
    assert is_basic(conv(2, [[[1, 0]], [[0, 1]]]))[0]
    basic, g = is_basic(conv(2, [[[0, 0]], [[1, 0]], [[0, 1]]]))
    assert not basic and g.tolist() == [0, 1]


def test_reduced_examples():
    assert is_reduced(conv(2, [[[1, 0]], [[0, 1]]]))
    assert not is_reduced(conv(2, [[[0, 1], [0, 1]], [[1, 0], [1, 0]]]))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(4, 10), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_split_outputs_certify(q, n, mu, seed):
    rng = np.random.default_rng(seed)
    V = split_or_reject(rng, q, n, mu=mu, max_states=2**10)
    c = certify(V, with_inverse=True)
    assert c.basic and c.reduced
    # exact gcd agrees with explicit minor enumeration
    g_enum, complete = polymat.minors_gcd_enum(V.field, V.nested(), budget=5000, samples=200)
    assert len(g_enum) == 1 or not complete
    prod = polymat.pmat_mul(V.field, V.nested(), c.right_inverse)
    for i in range(V.k):
        for j in range(V.k):
            assert np.array_equal(polymat.trim(prod[i][j]), [1] if i == j else [])


def test_memory_one_delta_is_rank_h1():
    S = split_parity(hamming_code(4), (3, 1))
    assert conv_from_split(S).delta == S.ranks[1]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(5, 10), st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_delta_is_top_aligned_count(q, n, mu, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=mu, max_states=2**10)
    assert V.delta == top_aligned_delta(V.split.ranks)


# -- free distance -----------------------------------------------------------------------


def test_small_example_df_3():
    V = conv(2, [[[1, 1]], [[1, 0]]])
    assert free_distance(V).value == 3
    assert enumerate_min_weight(V, 4) == 3
    assert unrolled_min_weight(V, 4) == 3


def test_memory_zero_is_block_distance():
    F = gf(2)
    C = hamming_code(3)
    V = ConvCode(F, C.G.a[None])
    assert free_distance(V).value == 3


def test_melas_free_distance(melas_v):
    res = free_distance(melas_v)
    assert res.exact and res.value >= 3
    assert res.value == unrolled_min_weight(melas_v, 2 * EncoderTrellis(melas_v).states)
    assert res.value >= min_distance(melas_v.split.dual_source).d


def test_hamming_split_lower_bound():
    V = conv_from_split(split_parity(hamming_code(3), (2, 1)))
    assert min_distance(V.split.dual_source).d == 4
    assert free_distance(V).value >= 4


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(3, 6), st.integers(0, 2**32 - 1))
def test_search_matches_literal_enumeration(q, n, seed):
    rng = np.random.default_rng(seed)
    V = split_or_reject(rng, q, n, mu=1, max_states=8)
    if q ** (V.k * 3) > 50000:
        return
    # the DP and literal enumeration agree at degree 2; the search may find lighter words later
    dp2 = unrolled_min_weight(V, 2)
    assert enumerate_min_weight(V, 2) == dp2
    assert free_distance(V).value <= dp2


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(3, 9), st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_search_matches_unrolled_dp(q, n, mu, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=mu, max_states=64)
    T = EncoderTrellis(V)
    assert free_distance(V).value == unrolled_min_weight(V, 2 * T.states)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(4, 9), st.integers(0, 2**32 - 1))
def test_bracket_contains_exact_value(q, n, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=1, max_states=64)
    exact = free_distance(V).value
    res = free_distance(V, state_cap=1, horizon=1)
    assert res.lower <= exact <= res.upper


def test_non_split_code_bracket_is_sound():
    # random basic code without a split: the bracket lower end comes from the frontier only
    V = conv(2, [[[1, 1, 1]], [[1, 0, 1]], [[0, 1, 1]]])
    exact = free_distance(V).value
    res = free_distance(V, state_cap=1, horizon=2)
    assert res.lower <= exact <= res.upper


# -- dual code and its free distance ---------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(3, 7), st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_dual_conv_is_orthogonal_basic_reduced(q, n, mu, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=mu, max_states=2**8)
    D = dual_conv(V)
    assert D.k == V.n - V.k
    c = certify(D)
    assert c.basic and c.reduced
    DT = [[D.nested()[j][i] for j in range(D.k)] for i in range(D.n)]
    for row in polymat.pmat_mul(V.field, V.nested(), DT):
        assert all(not len(polymat.trim(x)) for x in row)
    # degrees of a code and its dual agree for basic minimal encoders
    assert D.delta == V.delta


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(3, 7), st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_syndrome_trellis_matches_dual_encoder(q, n, mu, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=mu, max_states=2**6)
    D = dual_conv(V)
    if V.field.q ** D.k > 2**12:
        return
    assert dual_free_distance(V).value == free_distance(D).value


# -- distance bounds attached to a split ---------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(4, 9), st.integers(0, 2**32 - 1))
def test_split_bounds_hold(q, n, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=1, max_states=2**8)
    b = split_bounds(V.split)
    assert free_distance(V).value >= b.df_lower.d
    lo, hi = b.window
    ddf = dual_free_distance(V).value
    assert lo <= ddf <= hi


def test_memory_zero_window_collapses():
    C = hamming_code(3)
    b = split_bounds(split_parity(C, (3,)))
    assert b.window == (3, 3)


def test_generator_split_uses_dual_source():
    C = hamming_code(3)
    S = split_generator(C, (2, 2))
    assert S.kind == "generator"
    assert min_distance(S.dual_source).d == 3
    V = conv_from_split(S)
    assert free_distance(V).value >= 3


def test_melas_dual_window(melas_v):
    lo, hi = split_bounds(melas_v.split).window
    d = dual_free_distance(melas_v).value
    assert dual_conv(melas_v).params() == (15, 13, 2, 1)
    assert lo <= d <= hi


def test_zero_code_dual_distance():
    F = gf(2)
    V = ConvCode(F, np.zeros((1, 0, 3), dtype=np.int64))
    assert dual_free_distance(V).value == 1
    assert make_code(F, G=Matrix(F, np.eye(3, dtype=np.int64))).k == 3
