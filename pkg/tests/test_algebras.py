import math
from fractions import Fraction

import pytest

from cbraid import algebras as alg
from cbraid.errors import BadSpec, UnsupportedCase
from cbraid.group_core import GroupParams
from cbraid.ncgb import QQ, Field


def group_order(d, e, n):
    return GroupParams(d, e, n).order


@pytest.mark.parametrize("e,n", [(2, 3), (3, 3), (4, 3), (3, 4), (1, 3), (5, 3)])
def test_hecke_een_dimension(e, n):
    assert alg.dimension(alg.hecke(e, n, 2)) == e ** (n - 1) * math.factorial(n) == group_order(1, e, n)


@pytest.mark.parametrize("d,n,b", [(2, 2, (1,)), (3, 2, (1, 1)), (2, 3, (1,)), (4, 2, (1, 2, 1))])
def test_hecke_d1n_dimension(d, n, b):
    spec = alg.hecke_d1n(d, n, 2, b)
    assert alg.dimension(spec) == d ** n * math.factorial(n) == group_order(d, 1, n)


def test_rational_parameters():
    assert alg.dimension(alg.hecke(3, 3, Fraction(3, 7))) == 54
    assert alg.dimension(alg.hecke(4, 3, 5), Field(103)) == 96


@pytest.mark.parametrize("spec", [alg.hecke(3, 3, 2), alg.hecke_d1n(2, 2, 1, (1,)), alg.hecke_d1n(3, 2, 2, (1, 1)),
                                  alg.hecke(4, 3, 3)])
def test_lambda_basis_full_rank(spec):
    rep = alg.verify_lambda_basis(spec)
    assert rep.ok, rep


def test_lambda_catches_a_bad_list():
    spec = alg.hecke(3, 3, 2)
    words = alg.lambda_basis(spec)
    words[-1] = words[0]
    rep = alg.verify_lambda_basis(spec, words=words)
    assert rep.rank == 53 and not rep.ok


def test_dihedral_hecke_two_parameters():
    with pytest.raises(UnsupportedCase):
        alg.presentation(alg.hecke(4, 2, 2))
    spec = alg.AlgebraSpec("Hecke_een", 1, 4, 2, {"a1": 2, "a2": 3}, two_parameter=True)
    assert alg.dimension(spec) == 8
    assert alg.dimension(alg.hecke(3, 2, 2)) == 6


def test_hecke_identities():
    c = alg.compute(alg.hecke(3, 3, 2))
    a = 2
    assert alg.verify_identity(c, [("t1 t0 t0", 1)], [("t1 t0", a), ("t1", 1)])
    for j in range(3):
        for i in range(3):
            if i != j:
                assert alg.verify_identity(c, [(f"t{j} t{i}", 1)],
                                           [(f"t{(j - 1) % 3} t{(i - 1) % 3}", 1), (f"t{i}", a), (f"t{(j - 1) % 3}", -a)])
    assert not alg.verify_identity(c, [("t1 t0", 1)], [("t0 t1", 1)])


def test_bad_specs():
    with pytest.raises(BadSpec):
        alg.AlgebraSpec("Nope", 1, 3, 3)
    with pytest.raises(BadSpec):
        alg.presentation(alg.bmw(3))


def test_bmw_scalars():
    sc = alg.bmw_scalars(alg.bmw(3, m=2, l=17 ** 3))
    m, l = sc["m"], sc["l"]
    assert sc["x"] == (m * l - l * l + 1) / (m * l)
    sc4 = alg.bmw_scalars(alg.bmw(4, v=4, l=9))
    assert sc4["m"] == Fraction(15, 4)


def test_presentation_export_round_trip(tmp_path):
    from cbraid.ncgb import load_relations
    pres = alg.presentation(alg.bmw(3, m=2, l=17 ** 3))
    f = tmp_path / "bmw.json"
    f.write_text(pres.dumps())
    assert load_relations(str(f), QQ) == pres.polys(QQ)
    assert pres.names == alg.BMW_NAMES


@pytest.mark.parametrize("e,dim", [(3, 297), (4, 384)])
def test_brauer_dimensions(e, dim):
    assert alg.dimension(alg.brauer(e, 3, 5)) == dim


def test_brauer_dimension_in_prime_field():
    assert alg.dimension(alg.brauer(5, 3, 5), Field(103)) == 1275


def test_brauer_identities():
    c = alg.compute(alg.brauer(3, 3, 5))
    assert alg.verify_identity(c, [("e1 e0 e1", 1)], [("e1", 1)])
    assert alg.verify_identity(c, [("e0 e1 e0", 1)], [("e0", 1)])
    for k in (0, 1):
        assert alg.verify_identity(c, [(f"t{k} s3 e{k}", 1)], [(f"f3 e{k}", 1)])
    assert alg.verify_identity(c, [("e0 e0", 1)], [("e0", 5)])


def test_bmw_encodings_agree_mod_p():
    F = Field(103)
    direct = alg.compute(alg.bmw(3, m=2, l=17 ** 3), F)
    inverse = alg.compute(alg.bmw(3, m=2, l=17 ** 3, encoding="inverse"), F)
    assert direct.dimension == inverse.dimension == 297


@pytest.mark.long
def test_bmw_443_rational():
    assert alg.dimension(alg.bmw(4, v=4, l=9)) == 384


@pytest.mark.long
def test_bmw_553_mod_103():
    assert alg.dimension(alg.bmw(5, m=263, l=151), Field(103)) == 1275


@pytest.mark.parametrize("a", range(7))
def test_trace_form_rank_tracks_root_of_unity(a):
    # t^2 = a t + 1 gives q + 1/q = a^2 + 2; S3 degenerates when q is -1 or a primitive cube root
    report = alg.trace_form(alg.compute(alg.hecke(1, 3, a), Field(7)))
    degenerate = (a * a + 4) * (a * a + 3) % 7 == 0
    assert report.dimension == 6
    assert (report.rank < 6) == degenerate


def test_trace_form_hecke_333_rational():
    report = alg.trace_form(alg.compute(alg.hecke(3, 3, 2)))
    assert (report.dimension, report.rank) == (54, 54) and report.nondegenerate
