import pytest
from hypothesis import given, settings, strategies as st

from cbraid.errors import BadK
from cbraid.group_core import Element, GroupParams, een, enumerate_group, evaluate_text, inverse, multiply
from cbraid.interval import (bullet_profile, divides_lambda_k, exhaustive_elements, interval_divisors,
                             is_balanced, join, left_divides, meet, phi, predicted_size, right_divides,
                             verify_lattice)
from cbraid.normal_form import lambda_power, length, longest_elements


def test_divides_basics():
    p = een(3, 3)
    lam = lambda_power(p, 1)
    one = Element.identity(p)
    t0, t1 = evaluate_text("t0", p), evaluate_text("t1", p)
    assert left_divides(one, lam) and left_divides(lam, lam)
    assert left_divides(t1, lam)
    assert right_divides(t0, evaluate_text("t1 t0", p))


def test_matrix_examples():
    a = Element(een(3, 5), (3, 4, 2, 0, 1), (0, 1, 1, 1, 0))
    assert divides_lambda_k(a, 1)
    b = Element(een(3, 5), (3, 4, 2, 0, 1), (0, 0, 1, 0, 2))
    assert divides_lambda_k(b, 2)
    c = Element(een(3, 4), (0, 2, 1, 3), (2, 1, 1, 2))
    assert not divides_lambda_k(c, 1) and not divides_lambda_k(c, 2)
    # bullets sit where a row beats every earlier column from the left
    assert bullet_profile(a).bullets == {(1, 4), (3, 3), (4, 1)}
    for w in (a, b, c):
        assert divides_lambda_k(w, 1) == left_divides(w, lambda_power(w.params, 1))


@pytest.mark.parametrize("e,n", [(3, 3), (4, 3), (5, 3), (3, 4)])
def test_matrix_test_matches_length_additivity(e, n):
    p = een(e, n)
    for k in range(1, e):
        lam = lambda_power(p, k)
        ll = length(lam)
        for w in enumerate_group(p):
            additive = length(w) + length(multiply(inverse(w), lam)) == ll
            assert divides_lambda_k(w, k) == additive


def test_interval_sizes():
    assert len(exhaustive_elements(een(3, 3), 1)) == 35
    assert predicted_size(een(3, 3)) == 35
    d224 = interval_divisors(een(2, 4), 1)
    assert len(d224) == 192 == een(2, 4).order
    for e in (3, 4, 5, 6):
        assert len(exhaustive_elements(een(e, 2), 1)) == e + 2
    for e, n, k in ((4, 3, 2), (5, 3, 2), (4, 4, 1), (3, 4, 2)):
        assert len(interval_divisors(een(e, n), k, route="both")) == predicted_size(een(e, n))
    with pytest.raises(BadK):
        interval_divisors(een(3, 3), 0)


@pytest.mark.parametrize("e,n", [(3, 3), (4, 3)])
def test_balanced_maximal_elements(e, n):
    p = een(e, n)
    lams = {lambda_power(p, k) for k in range(1, e)}
    for w in longest_elements(p).witnesses:
        assert is_balanced(w) == (w in lams)
    assert is_balanced(Element.identity(p))


def test_phi_is_transpose_anti_automorphism():
    p = een(4, 3)
    for w in list(enumerate_group(p))[::7]:
        assert phi(phi(w)) == w
        for u in (evaluate_text("t1", p), evaluate_text("s3", p)):
            assert phi(multiply(w, u)) == multiply(phi(u), phi(w))
    assert phi(evaluate_text("t1", p)) == evaluate_text("t3", p)


def brute_join(u, v, iv):
    ups = [w for w in iv if left_divides(u, w) and left_divides(v, w)]
    least = [w for w in ups if all(left_divides(w, x) for x in ups)]
    assert len(least) == 1
    return least[0]


def brute_meet(u, v, iv):
    downs = [w for w in iv if left_divides(w, u) and left_divides(w, v)]
    top = [w for w in downs if all(left_divides(x, w) for x in downs)]
    assert len(top) == 1
    return top[0]


def test_join_meet_against_brute_force():
    p = een(3, 3)
    iv = interval_divisors(p, 1)
    elems = list(iv)
    for u in elems:
        for v in elems[::3]:
            assert join(u, v, 1) == brute_join(u, v, elems)
    for u in elems[::4]:
        for v in elems[::5]:
            assert meet(u, v, 1, iv) == brute_meet(u, v, elems)


def test_atom_joins():
    p = een(3, 3)
    t0, t1 = evaluate_text("t0", p), evaluate_text("t1", p)
    assert join(t0, t1, 1) == evaluate_text("t1 t0", p)
    q = een(3, 4)
    assert join(evaluate_text("t2", q), evaluate_text("s4", q), 1) == evaluate_text("t2 s4", q)
    one = Element.identity(p)
    assert join(t1, one, 1) == t1
    assert meet(t0, t1, 1) == one
    assert meet(lambda_power(p, 1), t1, 1) == t1


@pytest.mark.parametrize("e,n,k", [(3, 3, 1), (3, 3, 2), (2, 3, 1), (4, 3, 2)])
def test_lattice(e, n, k):
    rep = verify_lattice(een(e, n), k)
    assert rep.ok, rep.failures[:3]


def test_hasse_and_dot():
    iv = interval_divisors(een(3, 3), 1)
    covers = iv.hasse()
    assert all(iv.length_of(w) == iv.length_of(u) + 1 for u, w in covers)
    dot = iv.to_dot()
    assert dot.startswith("digraph") and dot == interval_divisors(een(3, 3), 1).to_dot()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_join_is_upper_bound(data):
    p = een(5, 3)
    k = data.draw(st.integers(1, 4))
    iv = sorted(interval_divisors(p, k, route="catalog"), key=lambda w: (w.col, w.exp))
    u = data.draw(st.sampled_from(iv))
    v = data.draw(st.sampled_from(iv))
    j = join(u, v, k)
    assert divides_lambda_k(j, k)
    assert left_divides(u, j) and left_divides(v, j)
    assert join(v, u, k) == j
