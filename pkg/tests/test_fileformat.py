import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _helpers import split_or_reject
from ccode.blockcode import random_code
from ccode.families import ROWS, melas_code, table_params
from ccode.fileformat import FormatError, parse, parse_record, render, render_record
from ccode.galois import gf


def same_code(a, b):
    return a.field == b.field and np.array_equal(a.G.a, b.G.a) and np.array_equal(a.H.a, b.H.a) and a.split_hint == b.split_hint


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 8, 9]), st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_block_code_roundtrip(q, n, seed):
    rng = np.random.default_rng(seed)
    C = random_code(gf(q), n, int(rng.integers(1, n + 1)), rng)
    text = render(C)
    (back,) = parse(text)
    assert same_code(C, back)
    assert render(back) == text


def test_split_hint_roundtrip():
    C = melas_code(4, 2)
    (back,) = parse(render(C))
    assert back.split_hint == (2, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(4, 8), st.integers(1, 2), st.integers(0, 2**32 - 1))
def test_conv_code_roundtrip(q, n, mu, seed):
    V = split_or_reject(np.random.default_rng(seed), q, n, mu=mu, max_states=2**8)
    text = render(V)
    (back,) = parse(text)
    assert back == V
    assert back.split is not None and back.split.kind == V.split.kind
    assert render(back) == text


@pytest.mark.parametrize("tag", sorted(ROWS))
def test_claim_roundtrip(tag):
    c = table_params(tag)
    (back,) = parse(render(c))
    assert back == c


def test_mixed_file_roundtrip():
    C = melas_code(4, 2)
    c = table_params("melas")
    text = render(C, c)
    objs = parse(text)
    assert len(objs) == 2 and render(*objs) == text


def test_records():
    assert render_record({"a": 1, "b": "x"}, "head") == "head a=1 b=x"
    assert parse_record("head a=1 b=x") == ("head", {"a": "1", "b": "x"})
    with pytest.raises(FormatError):
        render_record({"a": "x y"})
    with pytest.raises(FormatError):
        parse_record("a=1 a=2")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "ccode 2\n",
        "ccode 1\nwhat\n",
        "ccode 1\ncode n=3 k=1\nfield p=2 m=1 modulus=0,1\ngenerator\nmatrix rows=1 cols=3\n1 1\n",
        "ccode 1\ncode n=3 k=2\nfield p=2 m=1 modulus=0,1\ngenerator\nmatrix rows=1 cols=3\n1 1 1\n",
        "ccode 1\ncode n=3 k=1\nfield p=2 m=2 modulus=1,0,1\ngenerator\nmatrix rows=1 cols=3\n1 1 1\n",
        "ccode 1\nconvcode n=2 k=1 mu=1\nfield p=2 m=1 modulus=0,1\ncoeff i=1\nmatrix rows=1 cols=2\n1 1\n",
        "ccode 1\nclaim n=3 k=1 delta=1 mu=1 df_bound=zz3 field_q=2\n",
        "ccode 1\nclaim n=3 k=1 delta=1 mu=1 df_bound=ge3 field_q=2 bogus=1\n",
    ],
)
def test_malformed_input_rejected(text):
    with pytest.raises(FormatError):
        parse(text)


def test_comments_and_blank_lines_ignored():
    C = melas_code(2, 3)
    text = render(C)
    noisy = text.replace("generator\n", "# a comment\n\ngenerator\n")
    (back,) = parse(noisy)
    assert same_code(C, back)
