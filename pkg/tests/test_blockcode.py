import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _helpers import all_codewords, brute_distance, brute_min_weight, code_from_rows
from ccode import linalg
from ccode.blockcode import (
    BudgetExceeded,
    codewords,
    direct_sum_code,
    even_odd_min_weights,
    expand_code,
    extend_code,
    hamming_code,
    make_code,
    min_distance,
    min_weight_words,
    parity_code,
    product_code,
    puncture_code,
    random_code,
    repetition_code,
    shorten_code,
    uuv_code,
    weight_distribution,
)
from ccode.galois import Basis, canonical_basis, gf, random_basis
from ccode.linalg import Matrix


def test_repetition_parity_from_generator():
    F = gf(2)
    C = make_code(F, G=Matrix(F, [[1, 1, 1]]))
    assert linalg.same_row_space(C.H, Matrix(F, [[1, 1, 0], [0, 1, 1]]))


def test_single_parity_check_dimension():
    F = gf(2)
    assert make_code(F, H=Matrix(F, [[1, 1, 1]])).k == 2


def test_hamming_orthogonality():
    C = hamming_code(3)
    assert (C.n, C.k) == (7, 4)
    assert not linalg.matmul(C.field, C.G.a, C.H.a.T).any()


def test_dual_of_hamming_has_distance_4():
    assert min_distance(hamming_code(3).dual()).d == 4


@pytest.mark.parametrize(
    "C,d",
    [
        (repetition_code(gf(2), 3), 3),
        (hamming_code(3), 3),
        (parity_code(gf(2), 3), 2),
        (hamming_code(4), 3),
    ],
)
def test_min_distance_small(C, d):
    res = min_distance(C, use_cache=False)
    assert res == (d, True, d)
    assert brute_distance(C) == d


def test_bch_15_7():
    from ccode.families import bch_code

    C = bch_code(2, 15, 1, 5)
    assert (C.n, C.k) == (15, 7)
    assert min_distance(C) == (5, True, 5)
    assert brute_distance(C) == 5


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(2, 9), st.integers(0, 2**32 - 1))
def test_min_distance_matches_enumeration(q, n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, min(n, 5) + 1))
    if q**k > 4096:
        k = 3
    C = random_code(gf(q), n, k, rng)
    assert min_distance(C, use_cache=False).d == brute_distance(C)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(3, 8), st.integers(0, 2**32 - 1))
def test_budgeted_distance_is_a_lower_bound(q, n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(2, n))
    if q**k > 4096:
        k = 3
    C = random_code(gf(q), n, k, rng)
    res = min_distance(C, budget=3, use_cache=False)
    d = brute_distance(C)
    assert res.d <= d
    if res.upper is not None:
        assert res.upper >= d
    if res.exact:
        assert res.d == d


def test_budget_exceeded_when_bound_disallowed():
    C = random_code(gf(2), 20, 12, np.random.default_rng(3))
    with pytest.raises(BudgetExceeded):
        min_distance(C, budget=10, use_cache=False, allow_bound=False)


def test_budget_env_override(monkeypatch):
    from ccode.blockcode import default_budget

    monkeypatch.setenv("CCODE_BUDGET", "17")
    assert default_budget() == 17


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_weight_distribution_matches_enumeration(q, n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, n + 1))
    if q**k > 4096:
        k = 2
    C = random_code(gf(q), n, k, rng)
    words = all_codewords(C)
    want = np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    assert (weight_distribution(C) == want).all()
    assert len(codewords(C)) == q**k


def test_min_weight_words_listing():
    C = hamming_code(3)
    d, words = min_weight_words(C)
    assert d == 3 and len(words) == 7
    assert (np.count_nonzero(words, axis=1) == 3).all()


def test_even_odd_parity_code():
    assert even_odd_min_weights(parity_code(gf(2), 3)) == (2, None)


def test_even_odd_repetition_code():
    assert even_odd_min_weights(repetition_code(gf(2), 3)) == (None, 3)


def test_even_odd_hamming():
    assert even_odd_min_weights(hamming_code(3)) == (4, 3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(2, 7), st.integers(0, 2**32 - 1))
def test_even_odd_matches_enumeration(q, n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, min(n, 4) + 1))
    C = random_code(gf(q), n, k, rng)
    words = all_codewords(C)
    even = C.field.sum(words, axis=1) == 0
    assert even_odd_min_weights(C) == (brute_min_weight(words[even]), brute_min_weight(words[~even]))


def test_expand_repetition_gf4():
    ext, sub = gf(4), gf(2)
    beta = Basis(ext, sub, (1, ext.primitive_element))
    E = expand_code(repetition_code(ext, 3), beta)
    assert (E.n, E.k) == (6, 2)
    assert min_distance(E).d >= 3
    assert brute_distance(E) == min_distance(E).d


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(4, 2), (8, 2), (9, 3)]), st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_dual_of_expansion_is_expansion_of_dual(pair, n, seed):
    rng = np.random.default_rng(seed)
    ext, sub = gf(pair[0]), gf(pair[1])
    k = int(rng.integers(1, n))
    C = random_code(ext, n, k, rng)
    for beta in (canonical_basis(ext, sub), random_basis(ext, sub, rng)):
        lhs = expand_code(C.dual(), beta.dual())
        rhs = expand_code(C, beta).dual()
        assert linalg.same_row_space(lhs.G, rhs.G)


def test_puncture_shorten_extend_parameters():
    C = hamming_code(3)
    P = puncture_code(C, 0)
    assert (P.n, P.k, P.k_loss) == (6, 4, 0)
    S = shorten_code(C, 0)
    assert (S.n, S.k) == (6, 3)
    E = extend_code(C)
    assert (E.n, E.k) == (8, 4)
    assert min_distance(E).d == 4


def test_direct_sum_example():
    F = gf(2)
    C = direct_sum_code(repetition_code(F, 3), parity_code(F, 3))
    assert (C.n, C.k) == (6, 3)
    assert min_distance(C, use_cache=False).d == 2


def test_uuv_example():
    F = gf(2)
    C = uuv_code(parity_code(F, 3), repetition_code(F, 3))
    assert (C.n, C.k) == (6, 3)
    assert min_distance(C, use_cache=False).d == 3 == brute_distance(C)


def test_product_example():
    F = gf(2)
    C = product_code(repetition_code(F, 3), repetition_code(F, 3))
    assert (C.n, C.k) == (9, 1)
    assert min_distance(C, use_cache=False).d == 9


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(2, 5), st.integers(0, 2**32 - 1))
def test_combination_distance_formulas(q, n, seed):
    rng = np.random.default_rng(seed)
    F = gf(q)
    C1 = random_code(F, n, int(rng.integers(1, n)), rng)
    C2 = random_code(F, n, int(rng.integers(1, n)), rng)
    d1, d2 = brute_distance(C1), brute_distance(C2)
    assert brute_distance(direct_sum_code(C1, C2)) == min(d1, d2)
    assert brute_distance(uuv_code(C1, C2)) == min(2 * d1, d2)
    P = product_code(C1, C2)
    if q ** P.k <= 4096:
        assert brute_distance(P) == d1 * d2


def test_bad_pair_rejected():
    F = gf(2)
    with pytest.raises(ValueError):
        from ccode.blockcode import BlockCode

        BlockCode(Matrix(F, [[1, 1]]), Matrix(F, [[1, 0]]))


def test_code_from_rows_helper_agrees():
    C = code_from_rows(3, [[1, 2, 0, 1], [0, 1, 1, 1]])
    assert C.k == 2 and brute_distance(C) == min_distance(C).d
