import pytest
from hypothesis import given, settings, strategies as st

from cbraid.errors import BadK
from cbraid.group_core import Element, GroupParams, een, enumerate_group, evaluate, evaluate_text, multiply, generator_element
from cbraid.normal_form import (bfs_lengths, check_against_bfs, is_left_descent, lambda_power, left_descents,
                                length, longest_elements, reduced_expression)

# the four worked matrices; col is 0-based, exp in units of zeta_{de}
WORKED = [
    (GroupParams(1, 3, 4), (3, 1, 2, 0), (0, 2, 1, 0), "t0 s3 t1 t0 s4 s3 t0"),
    (GroupParams(1, 2, 4), (1, 3, 2, 0), (0, 1, 0, 1), "t1 t0 s3 s4 s3 t1"),
    (GroupParams(3, 3, 4), (0, 2, 3, 1), (1, 0, 1, 1), "z s3 t1 t0 s3 s4 s3 t1 t0"),
    (GroupParams(3, 1, 3), (1, 2, 0), (1, 2, 2), "z s2 z z s2 s3 s2 z z"),
]


@pytest.mark.parametrize("params,col,exp,word", WORKED)
def test_worked_examples(params, col, exp, word):
    w = Element(params, col, exp)
    re_ = reduced_expression(w)
    assert str(re_) == word
    assert re_.length == len(word.split())
    assert evaluate_text(word, params) == w


def test_identity_is_empty():
    re_ = reduced_expression(Element.identity(een(3, 3)))
    assert re_.length == 0 and str(re_) == ""


def test_lengths_of_extremes():
    for e, n in ((3, 3), (4, 3), (2, 4)):
        assert length(lambda_power(een(e, n), 1)) == n * (n - 1)
    assert longest_elements(een(1, 4)).max_length == 6
    assert longest_elements(GroupParams(3, 1, 3)).max_length == 3 * (3 + 3 - 2)


@pytest.mark.parametrize("params", [een(3, 3), een(4, 3), een(2, 4), GroupParams(3, 1, 3),
                                    GroupParams(2, 2, 3), een(5, 3)])
def test_length_matches_bfs(params):
    assert check_against_bfs(params) == []


@pytest.mark.parametrize("params", [een(3, 3), een(4, 3), GroupParams(3, 1, 3), GroupParams(2, 2, 3)])
def test_re_evaluates_back(params):
    for w in enumerate_group(params):
        re_ = reduced_expression(w)
        assert evaluate(re_.word) == w


@pytest.mark.parametrize("params", [een(3, 3), een(4, 3), GroupParams(3, 1, 3), GroupParams(2, 2, 3)])
def test_descent_rule(params):
    gens = {t: generator_element(t, params) for t in params.alphabet()}
    for w in enumerate_group(params):
        lw = length(w)
        for t, g in gens.items():
            assert is_left_descent(t, w) == (length(multiply(g, w)) == lw - 1)


def test_descent_examples():
    p = een(3, 3)
    lam = lambda_power(p, 1)
    assert is_left_descent("t1", lam)
    assert not is_left_descent("s3", Element.identity(p))
    assert set(left_descents(lam)) == set(p.alphabet())


def test_lambda_power():
    assert lambda_power(een(3, 3), 1).exp == (1, 1, 1)
    assert lambda_power(een(4, 3), 2).exp == (0, 2, 2)
    with pytest.raises(BadK):
        lambda_power(een(3, 3), 3)


@pytest.mark.parametrize("params,top,count", [
    (een(3, 3), 6, 4), (een(4, 3), 6, 9), (een(2, 4), 12, 1), (GroupParams(3, 3, 4), 14, 512),
    (GroupParams(3, 1, 3), 12, 1), (GroupParams(2, 1, 2), 4, 1),
])
def test_longest_counts(params, top, count):
    info = longest_elements(params)
    assert (info.max_length, info.count) == (top, count)
    for w in info.witnesses:
        assert length(w) == top


@pytest.mark.parametrize("params", [een(3, 3), een(4, 3), GroupParams(3, 1, 3), GroupParams(2, 2, 3)])
def test_longest_exhaustive(params):
    dist = bfs_lengths(params)
    top = max(dist.values())
    tops = {w for w, d in dist.items() if d == top}
    info = longest_elements(params)
    assert top == info.max_length
    assert tops == set(info.witnesses)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([een(3, 4), GroupParams(3, 3, 4), GroupParams(2, 1, 4), een(5, 4)]), st.data())
def test_re_is_geodesic_word_for_element(params, data):
    word = " ".join(data.draw(st.lists(st.sampled_from(params.alphabet()), max_size=16)))
    w = evaluate_text(word, params)
    re_ = reduced_expression(w)
    assert evaluate(re_.word) == w
    assert re_.length <= len(word.split())
    assert re_.length % 2 == len(word.split()) % 2 or params.d > 1
