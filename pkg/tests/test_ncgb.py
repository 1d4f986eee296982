import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from cbraid import algebras as alg
from cbraid.errors import BadSpec, CapExceeded, InfiniteDimensional
from cbraid.ncgb import (QQ, Field, NcPoly, coordinates, dimension, groebner, load_relations, mult_matrix,
                         poly_from_json, poly_to_json, quotient_basis, rank_of, w, word_matrix)


def x2_minus_1(F=QQ):
    return [NcPoly.from_pairs([((0, 0), 1), ((), -1)], F)]


def test_involution_algebra():
    gb = groebner(x2_minus_1(), QQ, 1)
    assert gb.complete
    assert [p.terms for p in gb.polys()] == [x2_minus_1()[0].terms]
    qb = quotient_basis(gb)
    assert qb.monomials == [b"", w(0)]
    assert gb.reduce(NcPoly.from_pairs([((0, 0, 0), 1)], QQ)).terms == {w(0): 1}
    assert gb.reduce(x2_minus_1()[0]).is_zero()
    M = mult_matrix(0, qb, gb)
    assert M == [[0, 1], [1, 0]]


def coxeter_relations(e, F):
    # a^2 = b^2 = 1 and the braid relation of length e
    alt = lambda first, n: tuple((first + i) % 2 for i in range(n))  # noqa: E731
    rels = [[((0, 0), 1), ((), -1)], [((1, 1), 1), ((), -1)], [(alt(0, e), 1), (alt(1, e), -1)]]
    return [NcPoly.from_pairs(r, F) for r in rels]


def dihedral_order(e):
    # closure of two reflections of a regular e-gon, acting on vertex labels
    a = tuple((-i) % e for i in range(e))
    b = tuple((1 - i) % e for i in range(e))
    seen, frontier = {tuple(range(e))}, [tuple(range(e))]
    while frontier:
        g = frontier.pop()
        for h in (a, b):
            gh = tuple(h[g[i]] for i in range(e))
            if gh not in seen:
                seen.add(gh)
                frontier.append(gh)
    return len(seen)


@pytest.mark.parametrize("e", [3, 4, 5, 6, 7])
def test_dihedral_group_algebras(e):
    assert dimension(coxeter_relations(e, QQ), QQ, 2) == dihedral_order(e) == 2 * e


def test_klein_four_algebra():
    # commuting involutions; the polygon action above is not faithful for e = 2
    assert dimension(coxeter_relations(2, QQ), QQ, 2) == 4


def test_symmetric_group_algebra():
    # S_4 Coxeter presentation
    F = QQ
    rels = []
    for g in range(3):
        rels.append([((g, g), 1), ((), -1)])
    rels.append([((0, 1, 0), 1), ((1, 0, 1), -1)])
    rels.append([((1, 2, 1), 1), ((2, 1, 2), -1)])
    rels.append([((0, 2), 1), ((2, 0), -1)])
    assert dimension([NcPoly.from_pairs(r, F) for r in rels], F, 3) == len(list(permutations(range(4))))


def test_cap_and_infinite():
    rels = [NcPoly.from_pairs([((0, 1), 1), ((1, 0), -1)], QQ)]
    gb = groebner(rels, QQ, 2)
    with pytest.raises(InfiniteDimensional):
        quotient_basis(gb)
    hecke = alg.presentation(alg.hecke(3, 3, 2))
    with pytest.raises(CapExceeded):
        dimension(hecke.polys(QQ), QQ, hecke.ngens, degree_cap=3)
    with pytest.raises(CapExceeded):
        groebner(hecke.polys(QQ), QQ, hecke.ngens, degree_cap=3, raise_on_cap=True)


def test_fields():
    F = Field(7)
    assert F("1/3") == 5 and F(Fraction(-1, 2)) == 3
    with pytest.raises(BadSpec):
        Field(6)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))
    assert QQ.fmt(QQ("6/4")) == "3/2"


def test_json_round_trip(tmp_path):
    pres = alg.presentation(alg.hecke(3, 3, Fraction(5, 3)))
    polys = pres.polys(QQ)
    blob = [poly_to_json(p, QQ) for p in polys]
    assert [poly_from_json(b, QQ) for b in blob] == polys
    f = tmp_path / "rels.json"
    f.write_text(pres.dumps())
    assert load_relations(str(f), QQ) == polys
    f.write_text(json.dumps(blob))
    assert load_relations(str(f), QQ) == polys


@pytest.mark.parametrize("p", [0, 103, 10007])
def test_field_invariance(p):
    F = Field(p)
    pres = alg.presentation(alg.hecke(3, 3, 2))
    assert dimension(pres.polys(F), F, pres.ngens) == 54


HECKE = alg.compute(alg.hecke(3, 3, 2))
WORDS = st.lists(st.integers(0, HECKE.pres.ngens - 1), max_size=7).map(bytes)


@settings(max_examples=60, deadline=None)
@given(WORDS, WORDS, st.integers(0, 9))
def test_ideal_membership(u, v, ri):
    # u * r * v reduces to 0 for every defining relation r
    rels = HECKE.pres.polys(QQ)
    r = rels[ri % len(rels)]
    prod = NcPoly.from_pairs(((u + wd + v, c) for wd, c in r.terms.items()), QQ)
    assert HECKE.gb.reduce(prod).is_zero()


@settings(max_examples=60, deadline=None)
@given(WORDS, WORDS)
def test_regular_representation_is_multiplicative(u, v):
    gb, qb = HECKE.gb, HECKE.qb
    Mu, Mv, Muv = word_matrix(u, qb, gb), word_matrix(v, qb, gb), word_matrix(u + v, qb, gb)
    prod = [[sum(Mu[i][k] * Mv[k][j] for k in range(len(qb))) for j in range(len(qb))] for i in range(len(qb))]
    assert prod == Muv


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(WORDS, st.integers(-5, 5)), max_size=6),
       st.lists(st.tuples(WORDS, st.integers(-5, 5)), max_size=6))
def test_reduction_is_linear_and_standard(a, b):
    gb = HECKE.gb
    pa, pb = NcPoly.from_pairs(a, QQ), NcPoly.from_pairs(b, QQ)
    ra, rb = gb.reduce(pa), gb.reduce(pb)
    rab = gb.reduce(NcPoly.from_pairs(a + b, QQ))
    assert rab == NcPoly.from_pairs(list(ra.terms.items()) + list(rb.terms.items()), QQ)
    assert all(gb.is_standard(wd) for wd in rab.terms)


def test_rank():
    assert rank_of([[1, 2], [2, 4]], QQ) == 1
    assert rank_of([[1, 2], [2, 4]], Field(3)) == 1
    assert rank_of([[1, 0], [0, 1]], Field(5)) == 2
    assert rank_of([], QQ) == 0
    qb = HECKE.qb
    assert coordinates({b"": 1}, qb, QQ)[0] == 1
