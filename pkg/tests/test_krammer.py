import dataclasses
import json
import random
from fractions import Fraction

import pytest

from cbraid import krammer as kr
from cbraid.errors import SingularSpecialization


@pytest.fixture(scope="module")
def rho3():
    return kr.build_rho3(2, 17)


@pytest.fixture(scope="module")
def rho4():
    return kr.build_rho4(2, 3)


def test_sizes(rho3, rho4):
    assert rho3.size == 9 and rho4.size == 12
    assert rho3.l == 17 ** 3 and rho4.l == 9 and rho4.v == 4


def test_relations_rho3(rho3):
    rep = kr.verify_relations(rho3)
    assert rep.ok, rep.failures
    assert kr.verify_relations(rho3, encoding="inverse").ok


def test_relations_rho4(rho4):
    rep = kr.verify_relations(rho4)
    assert rep.ok, rep.failures
    assert kr.verify_relations(rho4, encoding="inverse").ok


def test_perturbed_matrix_fails(rho3):
    A = [row[:] for row in rho3.T0]
    A[0][0] += 1
    bad = dataclasses.replace(rho3, T0=A, derived={})
    assert not kr.verify_relations(bad).ok


def test_matrix_algebra_dimensions(rho3, rho4):
    g3, g4 = rho3.generators(), rho4.generators()
    assert kr.algebra_dimension([g3["t0"], g3["t1"], g3["s3"]]) == 81
    assert kr.algebra_dimension([g4["t0"], g4["t1"], g4["s3"]]) == 144
    assert kr.algebra_dimension([kr.identity(5)]) == 1


def test_trace_identity(rho3, seed):
    assert kr.trace_check(rho3).value == Fraction(1, 17)
    assert kr.trace_check(kr.build_rho3(3, 5)).value == Fraction(1, 5)
    rng = random.Random(seed)
    done = 0
    while done < 5:
        m, lam = Fraction(rng.randint(-20, 20), rng.randint(1, 9)), Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        try:
            rep = kr.build_rho3(m, lam)
        except SingularSpecialization:
            continue
        assert kr.trace_check(rep).ok
        done += 1
    # the swapped product is only recorded
    assert isinstance(kr.trace_check(rho3, swap_ab=True).value, Fraction)


def test_singular_points():
    with pytest.raises(SingularSpecialization):
        kr.build_rho3(5, 5)
    with pytest.raises(SingularSpecialization):
        kr.build_rho3(0, 3)
    with pytest.raises(SingularSpecialization):
        kr.build_rho4(1, 0)


def test_center_and_idempotents(rho3, rho4):
    assert kr.center_check(rho3)
    for rep in (rho3, rho4):
        assert all(kr.idempotent_checks(rep).values())
        assert all(kr.cubic_check(rep).values())


def test_product_order_matters(rho3):
    rev = kr.verify_relations(rho3, order="reversed")
    assert not rev.ok


def test_json_export(rho4):
    blob = json.loads(rho4.matrices_json())
    assert kr.from_json(blob["A"]) == rho4.T0
    assert kr.from_json(kr.to_json(rho4.S3)) == rho4.S3
    assert blob["scalars"] == {"mu": "2", "lambda": "3"}


def test_inverse(rho3):
    T = rho3.T0
    assert kr.mat_mul(T, kr.mat_inverse(T)) == kr.identity(9)
