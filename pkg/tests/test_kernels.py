import random

import pytest

from cbraid import _kernels_py, kernels
from cbraid.algebras import bmw, hecke, presentation
from cbraid.ncgb import QQ, Field, groebner

compiled = pytest.importorskip("cbraid._kernels")


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("spec,F", [(hecke(4, 3, 3), Field(101)), (hecke(3, 3, 2), QQ),
                                    (bmw(3, m=2, l=17 ** 3), Field(103))])
def test_compiled_matches_pure(spec, F, seed):
    pres = presentation(spec)
    gb = groebner(pres.polys(F), F, pres.ngens, degree_cap=8 if spec.family == "BMW_een" else 24)
    rng = random.Random(seed)
    for _ in range(200):
        poly = {bytes(rng.randrange(pres.ngens) for _ in range(rng.randint(0, 9))): F(rng.randint(1, 50))
                for _ in range(rng.randint(1, 4))}
        if F.p:
            a = _kernels_py.reduce_mod_p(poly, gb.rules, gb.lengths, F.p)
            b = compiled.reduce_mod_p(poly, gb.rules, gb.lengths, F.p)
        else:
            a = _kernels_py.reduce_exact(poly, gb.rules, gb.lengths)
            b = compiled.reduce_exact(poly, gb.rules, gb.lengths)
        assert a == b
    for word in (b"", b"\x00\x01\x00", bytes(range(pres.ngens))):
        assert _kernels_py.find_reducer(word, gb.rules, gb.lengths) == compiled.find_reducer(word, gb.rules, gb.lengths)
        assert _kernels_py.heap_key(word) == compiled.heap_key(word)
