import random

import pytest

from cbraid.errors import BadK, NotCoprime
from cbraid.garside import (GarsideElement, GarsideMonoid, build_monoid, iso_check, iso_to_corran_picantin,
                            matsumoto_check, reduced_words)
from cbraid.group_core import een, evaluate_text, multiply
from cbraid.interval import divides_lambda_k


def test_monoid_data():
    M = build_monoid(een(3, 3), k=1)
    assert len(M.atoms) == 4 and M.delta_order == 3
    assert M.tokens == ["t0", "t1", "t2", "s3"]
    with pytest.raises(BadK):
        GarsideMonoid(3, 3, 3)


def test_small_normal_forms():
    M = GarsideMonoid(3, 3, 1)
    p = M.params
    assert M.normal_form("") == GarsideElement(0, ())
    t1t0 = evaluate_text("t1 t0", p)
    assert divides_lambda_k(t1t0, 1)
    assert M.normal_form("t1 t0") == GarsideElement(0, (t1t0,))
    assert M.head("t1 t0 s3") == t1t0 or M.head("t1 t0 s3") == M.normal_form("t1 t0 s3").seq[0]
    assert M.head("t1 t0 s3 t1 t0 s3") == M.delta
    assert M.head("s3") == evaluate_text("s3", p)


def test_inverse_atom():
    M = GarsideMonoid(3, 3, 1)
    x = M.normal_form("t0^-1")
    assert x.pd == -1 and len(x.seq) == 1
    # Delta^-1 times the simple must give back t0^-1
    assert x.seq[0] == multiply(M.delta, evaluate_text("t0", M.params).inverse())
    assert M.multiply(x, M.normal_form("t0")).is_identity()
    assert M.format(x) == "d^-1 . " + M.simple_word(x.seq[0])


@pytest.mark.parametrize("e,n,k", [(3, 3, 1), (3, 3, 2), (4, 3, 1), (4, 3, 3), (5, 3, 2), (3, 4, 1), (4, 4, 3)])
def test_relations_normalize_equal(e, n, k):
    M = GarsideMonoid(e, n, k)
    for lhs, rhs in M.relations():
        assert M.normal_form(lhs) == M.normal_form(rhs), (lhs, rhs)
    assert M.normal_form("t0") != M.normal_form("t1")


def test_named_relations():
    M = GarsideMonoid(3, 3, 1)
    assert M.equal(M.normal_form("t1 t0"), M.normal_form("t2 t1"))
    assert M.normal_form("s3 t0 s3") == M.normal_form("t0 s3 t0")


def random_rewrites(M, rng, steps):
    moves = [(tuple(a.split()), tuple(b.split())) for a, b in M.relations()]
    moves += [(b, a) for a, b in moves]
    letters = [(t, 1) for t in M.tokens] + [(t, -1) for t in M.tokens]
    word = [rng.choice(letters) for _ in range(rng.randint(1, 10))]
    for _ in range(steps):
        if rng.random() < 0.3:
            # insert a cancelling pair
            g = rng.choice(M.tokens)
            i = rng.randint(0, len(word))
            word[i:i] = [(g, 1), (g, -1)] if rng.random() < 0.5 else [(g, -1), (g, 1)]
            continue
        lhs, rhs = rng.choice(moves)
        pos = [i for i in range(len(word) - len(lhs) + 1)
               if all(word[i + j] == (lhs[j], 1) for j in range(len(lhs)))]
        if pos:
            i = rng.choice(pos)
            word[i:i + len(lhs)] = [(t, 1) for t in rhs]
        yield list(word)


@pytest.mark.parametrize("e,k", [(3, 1), (4, 3), (5, 2)])
def test_rewrites_preserve_normal_form(e, k, seed):
    M = GarsideMonoid(e, 3, k)
    rng = random.Random(seed + e)
    count = 0
    while count < 1000:
        start = None
        for w in random_rewrites(M, rng, 25):
            nf = M.normal_form(w)
            if start is None:
                start = nf
            assert nf == start
            count += 1


def test_multiply_and_inverse_consistent(seed):
    M = GarsideMonoid(4, 3, 1)
    rng = random.Random(seed)
    letters = [(t, s) for t in M.tokens for s in (1, -1)]
    for _ in range(60):
        a = [rng.choice(letters) for _ in range(rng.randint(0, 8))]
        b = [rng.choice(letters) for _ in range(rng.randint(0, 8))]
        x, y = M.normal_form(a), M.normal_form(b)
        assert M.multiply(x, y) == M.normal_form(a + b)
        assert M.multiply(x, M.inverse(x)).is_identity()


def test_matsumoto_small_interval():
    M = GarsideMonoid(3, 3, 1)
    for s in M.simples:
        assert matsumoto_check(s, M, limit=6)
    lam = M.delta
    assert len(reduced_words(lam)) > 1
    t1t0 = evaluate_text("t1 t0", M.params)
    assert {w for w in reduced_words(t1t0)} == {(f"t{i}", f"t{(i - 1) % 3}") for i in range(3)}


def test_reverse_round_trip(seed):
    rng = random.Random(seed)
    for e, k in ((3, 1), (4, 1), (5, 2)):
        M = GarsideMonoid(e, 3, k)
        for t in M.tokens:
            x = M.normal_form(t)
            assert M.rev.reverse(M.reverse(x)) == x
        letters = [(t, s) for t in M.tokens for s in (1, -1)]
        for _ in range(20):
            x = M.normal_form([rng.choice(letters) for _ in range(rng.randint(0, 7))])
            assert M.rev.reverse(M.reverse(x)) == x


def test_isomorphism_between_monoids():
    assert iso_check(5, 3, 2)
    assert iso_check(3, 3, 2)
    assert iso_to_corran_picantin(5, 2)["t1"] == "t2"
    with pytest.raises(NotCoprime):
        iso_to_corran_picantin(4, 2)
