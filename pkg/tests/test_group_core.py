import pytest
from hypothesis import given, settings, strategies as st

from cbraid.errors import BadParams, UnknownToken, UsageError, ZNotAllowed
from cbraid.group_core import (Element, GroupParams, een, enumerate_group, evaluate_text,
                               generator_element, inverse, multiply, parse_word, relation_catalog)


def dense_product(a, b):
    # plain matrix product over exponents of zeta_{de}; None is a zero entry
    n, de = a.params.n, a.params.de
    A, B = a.dense(), b.dense()
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if A[i][k] is not None and B[k][j] is not None:
                    out[i][j] = (A[i][k] + B[k][j]) % de
    return out


def test_parse_tokens():
    p = een(3, 3)
    assert parse_word("t1 t0 s3", p).tokens == ("t1", "t0", "s3")
    assert parse_word("s2 s3", p).tokens == ("t0", "s3")
    with pytest.raises(ZNotAllowed):
        parse_word("z t1", p)
    with pytest.raises(UnknownToken):
        parse_word("q1", p)


def test_generator_matrices():
    p = een(3, 3)
    # row 1 carries zeta^{-i}, row 2 carries zeta^{i}
    t1 = generator_element("t1", p)
    assert (t1.col, t1.exp) == ((1, 0, 2), (2, 1, 0))
    s3 = generator_element("s3", p)
    assert (s3.col, s3.exp) == ((0, 2, 1), (0, 0, 0))
    t0 = generator_element("t0", een(5, 4))
    assert t0.col == (1, 0, 2, 3) and not any(t0.exp)


def test_small_products():
    p = een(3, 3)
    t0, t1 = generator_element("t0", p), generator_element("t1", p)
    assert multiply(t0, t0).is_identity()
    x = multiply(t1, t0)
    assert x.col == (0, 1, 2) and x.exp == (2, 1, 0)
    assert [[c for c in row] for row in x.dense()] == dense_product(t1, t0)
    z = generator_element("z", GroupParams(3, 1, 3))
    assert inverse(z) == multiply(z, z)


def test_orders():
    assert sum(1 for _ in enumerate_group(een(3, 3))) == 54
    assert sum(1 for _ in enumerate_group(GroupParams(2, 1, 2))) == 8
    assert sum(1 for _ in enumerate_group(een(4, 3))) == 96
    assert GroupParams(3, 3, 4).order == 9 ** 4 * 24 // 3


def test_bad_input():
    with pytest.raises(BadParams):
        GroupParams(1, 3, 1)
    with pytest.raises(BadParams):
        Element(een(3, 3), (0, 1, 2), (1, 0, 0))
    with pytest.raises(UsageError):
        Element.from_json('{"e": 3, "n": 3, "col": [1, 2]}')


def test_relations_hold():
    for p in (een(3, 3), een(4, 3), GroupParams(2, 1, 3), GroupParams(3, 3, 3), een(2, 4)):
        for lhs, rhs in relation_catalog(p):
            assert evaluate_text(lhs, p) == evaluate_text(rhs, p), (p, lhs, rhs)


PARAMS = [een(3, 3), een(4, 3), GroupParams(3, 1, 3), GroupParams(3, 3, 4), een(2, 4)]


@st.composite
def element_pairs(draw):
    p = draw(st.sampled_from(PARAMS))
    alph = p.alphabet()
    words = [" ".join(draw(st.lists(st.sampled_from(alph), max_size=12))) for _ in range(3)]
    return [evaluate_text(w, p) for w in words]


@settings(max_examples=60, deadline=None)
@given(element_pairs())
def test_group_axioms(xs):
    a, b, c = xs
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, inverse(a)).is_identity()
    assert dense_product(a, b) == multiply(a, b).dense()


@settings(max_examples=40, deadline=None)
@given(element_pairs())
def test_json_round_trip(xs):
    for x in xs:
        assert Element.from_json(x.to_json()) == x
