"""Presentations of Hecke, BMW and Brauer algebras attached to G(e,e,n) and G(d,1,n).

A presentation is a list of generator names plus relations given as lists of
``(word, Fraction)`` terms, words being tuples of 0-based generator indices.
Scalars are specialized to rationals before anything is built.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import BadSpec, IncompleteBasis, UnsupportedCase
from .group_core import GroupParams, relation_catalog
from . import ncgb

FAMILIES = ("Hecke_een", "Hecke_d1n", "BMW_een", "Brauer_een")


@dataclass
class AlgebraSpec:
    family: str
    d: int = 1
    e: int = 1
    n: int = 3
    scalars: dict = field(default_factory=dict)
    encoding: str = "direct"        # BMW only: "direct" or "inverse"
    two_parameter: bool = False     # Hecke n = 2, e even

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise BadSpec(f"unknown family {self.family!r}")
        if self.n < 2 or self.e < 1 or self.d < 1:
            raise BadSpec("need n >= 2, e >= 1, d >= 1")
        self.scalars = {k: _q(v) for k, v in self.scalars.items()}

    def get(self, name: str, default=None) -> Fraction:
        if name in self.scalars:
            return self.scalars[name]
        if default is None:
            raise BadSpec(f"scalar {name!r} must be specialized")
        return _q(default)


def _q(x) -> Fraction:
    if isinstance(x, (tuple, list)):
        raise BadSpec("scalar must be a number")
    return Fraction(str(x)) if isinstance(x, str) else Fraction(x)


def hecke(e: int, n: int, a=2, **kw) -> AlgebraSpec:
    return AlgebraSpec("Hecke_een", 1, e, n, {"a": a, **kw})


def hecke_d1n(d: int, n: int, a=2, b: Sequence = (), **kw) -> AlgebraSpec:
    sc = {"a": a, **kw}
    for i, bi in enumerate(b, 1):
        sc[f"b{i}"] = bi
    return AlgebraSpec("Hecke_d1n", d, 1, n, sc)


def bmw(e: int, n: int = 3, encoding: str = "direct", **scalars) -> AlgebraSpec:
    return AlgebraSpec("BMW_een", 1, e, n, scalars, encoding=encoding)


def brauer(e: int, n: int = 3, x=3) -> AlgebraSpec:
    return AlgebraSpec("Brauer_een", 1, e, n, {"x": x})


# ---------------------------------------------------------------- presentations

@dataclass
class Presentation:
    names: list
    relations: list                 # list of list[(tuple, Fraction)]
    labels: list

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word(self, text: str) -> tuple:
        """Space separated generator names to an index tuple ('1' or '' is empty)."""
        toks = [t for t in text.replace(".", " ").split() if t != "1"]
        try:
            return tuple(self.names.index(t) for t in toks)
        except ValueError:
            raise BadSpec(f"unknown generator in {text!r}") from None

    def polys(self, F: ncgb.Field) -> list:
        out = []
        for rel in self.relations:
            p = ncgb.NcPoly.from_pairs(rel, F)
            if not p.is_zero():
                out.append(p)
        return out

    def to_json(self) -> list:
        rows = []
        for rel in self.relations:
            rows.append({"terms": [{"word": [i + 1 for i in wd], "coeff": _fmt(c)} for wd, c in rel]})
        return rows

    def dumps(self) -> str:
        return json.dumps({"generators": self.names, "relations": self.to_json()}, indent=1)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _rel(*pairs) -> list:
    return [(tuple(w), _q(c)) for w, c in pairs]


def _eq(lhs: Sequence[int], rhs: Sequence[int], c=1) -> list:
    """lhs = c * rhs."""
    return _rel((lhs, 1), (rhs, -_q(c)))


# Hecke ------------------------------------------------------------------

def hecke_presentation(spec: AlgebraSpec) -> Presentation:
    if spec.family == "Hecke_een":
        e, n = spec.e, spec.n
        if n == 2 and e % 2 == 0 and not spec.two_parameter:
            raise UnsupportedCase("H(e,e,2) with e even has two reflection classes; "
                                  "request the two-parameter variant")
        params = GroupParams(1, e, n)
        names = [f"t{i}" for i in range(e)] + [f"s{j}" for j in range(3, n + 1)]
    elif spec.family == "Hecke_d1n":
        d, n = spec.d, spec.n
        params = GroupParams(d, 1, n)
        names = (["z"] if d > 1 else []) + [f"s{j}" for j in range(2, n + 1)]
    else:
        raise BadSpec("not a Hecke spec")
    pres = Presentation(names, [], [])
    a = None if spec.two_parameter else spec.get("a")

    def quad(g: int, coef: Fraction):
        pres.relations.append(_rel(((g, g), 1), ((g,), -coef), ((), -1)))
        pres.labels.append(f"{names[g]}^2 - a {names[g]} - 1")

    for lhs, rhs in relation_catalog(params):
        if spec.family == "Hecke_d1n" and spec.d == 1:
            # G(1,1,n) is catalogued with t0 in the role of s2
            lhs, rhs = lhs.replace("t0", "s2"), rhs.replace("t0", "s2")
        lw, rw = pres.word(lhs), pres.word(rhs)
        if not rw and len(set(lw)) == 1:
            g = lw[0]
            if names[g] == "z":
                d = len(lw)
                terms = [((g,) * d, Fraction(1)), ((), Fraction(-1))]
                for i in range(1, d):
                    terms.append(((g,) * (d - i), -spec.get(f"b{i}")))
                pres.relations.append(terms)
                pres.labels.append("z^d - b1 z^(d-1) - ... - 1")
            elif spec.two_parameter and names[g].startswith("t"):
                quad(g, spec.get("a1" if g % 2 == 0 else "a2"))
            else:
                quad(g, a)
            continue
        pres.relations.append(_eq(lw, rw))
        pres.labels.append(f"{lhs} = {rhs}")
    return pres


# BMW / Brauer ---------------------------------------------------------------
#
# Symbolic words are lists of tokens ('T', i, +-1), ('S', 3, 1), ('E', i), ('F', 3)
# with i in Z/e.  T_i and E_i for i >= 2 are defined by conjugation and expanded
# down to T0, T1, E0, E1 before becoming polynomials.

def _t(i: int, e: int, sign: int = 1) -> list:
    i %= e
    if i in (0, 1):
        return [("T", i, sign)]
    a, b = _t(i - 1, e), _t(i - 2, e, sign)
    ainv = _t(i - 1, e, -1)
    return a + b + ainv


def _e(i: int, e: int) -> list:
    i %= e
    if i in (0, 1):
        return [("E", i)]
    return _t(i - 1, e) + _e(i - 2, e) + _t(i - 1, e, -1)


def _alt(first: int, length: int) -> list:
    """T_first T_other T_first ... with the given number of factors."""
    out = []
    cur = first
    for _ in range(length):
        out.append(("T", cur, 1))
        cur = 1 - cur
    return out


class _Expander:
    """Turns symbolic words into polynomials over the six (or eight) generators."""

    def __init__(self, l: Fraction, m: Fraction, h_gens: dict | None = None):
        self.l, self.m = l, m
        self.h = h_gens or {}        # i -> generator index standing for T_i^{-1}
        self.idx = {("T", 0): 0, ("T", 1): 1, ("S", 3): 2, ("E", 0): 3, ("E", 1): 4, ("F", 3): 5}

    def simplify(self, toks: list) -> tuple[Fraction, list]:
        """Cancel T T^-1 pairs and absorb T_i^{+-1} next to E_i into scalars."""
        coef = Fraction(1)
        out: list = []
        for tok in toks:
            out.append(tok)
            changed = True
            while changed and len(out) >= 2:
                changed = False
                x, y = out[-2], out[-1]
                if x[0] == "T" and y[0] == "T" and x[1] == y[1] and x[2] == -y[2]:
                    del out[-2:]
                    changed = True
                elif x[0] == "T" and y[0] == "E" and x[1] == y[1]:
                    coef *= self.l ** (-x[2])
                    del out[-2]
                    changed = True
                elif x[0] == "E" and y[0] == "T" and x[1] == y[1]:
                    coef *= self.l ** (-y[2])
                    del out[-1]
                    changed = True
        return coef, out

    def expand(self, toks: list, coef=1) -> list:
        c0, toks = self.simplify(toks)
        terms = [((), _q(coef) * c0)]
        for tok in toks:
            if tok[0] == "T" and tok[2] == -1:
                i = tok[1]
                if i in self.h:
                    opts = [((self.h[i],), Fraction(1))]
                else:
                    g, eg = self.idx[("T", i)], self.idx[("E", i)]
                    opts = [((g,), Fraction(1)), ((), self.m), ((eg,), -self.m)]
            else:
                opts = [((self.idx[tok[:2]],), Fraction(1))]
            terms = [(w + ow, c * oc) for w, c in terms for ow, oc in opts if c * oc]
        return terms

    def relation(self, *sides) -> list:
        """sides: (tokens, coefficient) pairs summed to zero."""
        acc: dict = {}
        for toks, c in sides:
            for w, v in self.expand(toks, c):
                acc[w] = acc.get(w, 0) + v
        return [(w, c) for w, c in acc.items() if c]


T0, T1, S3, E0, E1, F3 = ("T", 0, 1), ("T", 1, 1), ("S", 3, 1), ("E", 0), ("E", 1), ("F", 3)
BMW_NAMES = ["t0", "t1", "s3", "e0", "e1", "f3"]


def bmw_scalars(spec: AlgebraSpec) -> dict:
    """Resolve (m, l, v, x) from the specialization of a BMW or Brauer spec."""
    e = spec.e
    if spec.family == "Brauer_een":
        x = spec.get("x")
        return {"m": Fraction(0), "l": Fraction(1), "v": Fraction(1), "x": x}
    l = spec.get("l")
    if l == 0:
        raise BadSpec("l must be nonzero")
    if e % 2 == 0:
        v = spec.get("v")
        if v == 0:
            raise BadSpec("v must be nonzero")
        m = v - 1 / v
        if "m" in spec.scalars and spec.scalars["m"] != m:
            raise BadSpec("for e even m is v - 1/v")
    else:
        m = spec.get("m")
        v = None
    if m == 0:
        raise BadSpec("m must be nonzero for BMW; use the Brauer family")
    x = (m * l - l * l + 1) / (m * l)
    return {"m": m, "l": l, "v": v, "x": x}


def bmw_presentation(spec: AlgebraSpec) -> Presentation:
    if spec.family != "BMW_een":
        raise BadSpec("not a BMW spec")
    if spec.n != 3:
        raise UnsupportedCase("BMW presentations are built for n = 3 only")
    if spec.e < 3:
        raise BadSpec("BMW(e,e,3) needs e >= 3")
    sc = bmw_scalars(spec)
    if spec.encoding == "inverse":
        return _inverse_presentation(spec.e, sc)
    if spec.encoding != "direct":
        raise BadSpec(f"unknown encoding {spec.encoding!r}")
    return _dihedral_presentation(spec.e, sc, brauer=False)


def brauer_presentation(spec: AlgebraSpec) -> Presentation:
    if spec.family != "Brauer_een":
        raise BadSpec("not a Brauer spec")
    if spec.n != 3:
        raise UnsupportedCase("Brauer presentations are built for n = 3 only")
    if spec.e < 3:
        raise BadSpec("Br(e,e,3) needs e >= 3")
    return _dihedral_presentation(spec.e, bmw_scalars(spec), brauer=True)


def _dihedral_presentation(e: int, sc: dict, brauer: bool) -> Presentation:
    l, m, v, x = sc["l"], sc["m"], sc["v"], sc["x"]
    X = _Expander(l, m)
    pres = Presentation(list(BMW_NAMES), [], [])

    def add(label: str, *sides):
        r = X.relation(*sides)
        if r:
            pres.relations.append(r)
            pres.labels.append(label)

    # type A relations between T_i and S3, for every i in Z/e
    if brauer:
        add("S3^2 = 1", ([S3, S3], 1), ([], -1))
    else:
        add("m F3 = l(S3^2 + m S3 - 1)", ([S3, S3], l), ([S3], l * m), ([], -l), ([F3], -m))
    for i in (0, 1):
        Ti, Ei = _t(i, e), _e(i, e)
        if brauer:
            add(f"T{i}^2 = 1", (Ti + Ti, 1), ([], -1))
            add(f"E{i}^2 = x E{i}", (Ei + Ei, 1), (Ei, -x))
        else:
            add(f"m E{i} = l(T{i}^2 + m T{i} - 1)", (Ti + Ti, l), (Ti, l * m), ([], -l), (Ei, -m))
        add(f"T{i} E{i} = E{i}/l", (Ti + Ei, 1), (Ei, -1 / l))
        add(f"E{i} T{i} = E{i}/l", (Ei + Ti, 1), (Ei, -1 / l))
    if brauer:
        add("F3^2 = x F3", ([F3, F3], 1), ([F3], -x))
    add("S3 F3 = F3/l", ([S3, F3], 1), ([F3], -1 / l))
    add("F3 S3 = F3/l", ([F3, S3], 1), ([F3], -1 / l))
    for i in range(e):
        Ti, Ei = _t(i, e), _e(i, e)
        add(f"S3 T{i} S3 = T{i} S3 T{i}", ([S3] + Ti + [S3], 1), (Ti + [S3] + Ti, -1))
        add(f"F3 T{i} F3 = l F3", ([F3] + Ti + [F3], 1), ([F3], -l))
        add(f"E{i} S3 E{i} = l E{i}", (Ei + [S3] + Ei, 1), (Ei, -l))
        if brauer:
            add(f"S3 T{i} F3 = E{i} F3", ([S3] + Ti + [F3], 1), (Ei + [F3], -1))
            add(f"E{i} S3 T{i} = E{i} F3", (Ei + [S3] + Ti, 1), (Ei + [F3], -1))
            add(f"T{i} S3 E{i} = F3 E{i}", (Ti + [S3] + Ei, 1), ([F3] + Ei, -1))
            add(f"F3 T{i} S3 = F3 E{i}", ([F3] + Ti + [S3], 1), ([F3] + Ei, -1))
    # dihedral relations
    if e % 2:
        add("dihedral braid", (_alt(1, e), 1), (_alt(0, e), -1))
        for k in range(1, e - 1, 2):
            add(f"E1 (T0T1..){k} E1 = l E1", ([E1] + _alt(0, k) + [E1], 1), ([E1], -l))
            add(f"E0 (T1T0..){k} E0 = l E0", ([E0] + _alt(1, k) + [E0], 1), ([E0], -l))
        add("(T1T0..T0) E1 = E0 (T1T0..T0)", (_alt(1, e - 1) + [E1], 1), ([E0] + _alt(1, e - 1), -1))
        add("(T0T1..T1) E0 = E1 (T0T1..T1)", (_alt(0, e - 1) + [E0], 1), ([E1] + _alt(0, e - 1), -1))
    else:
        add("dihedral braid", (_alt(1, e), 1), (_alt(0, e), -1))
        c = 1 if brauer else (1 / v + l)
        for k in range(1, (e + 1) // 2, 2):
            add(f"E1 (T0T1..){k} E1 = c E1", ([E1] + _alt(0, k) + [E1], 1), ([E1], -c))
            add(f"E0 (T1T0..){k} E0 = c E0", ([E0] + _alt(1, k) + [E0], 1), ([E0], -c))
        vi = 1 if brauer else 1 / v
        add("(T1T0..T1) E0 = E0/v", (_alt(1, e - 1) + [E0], 1), ([E0], -vi))
        add("E0 (T1T0..T1) = E0/v", ([E0] + _alt(1, e - 1), 1), ([E0], -vi))
        add("(T0T1..T0) E1 = E1/v", (_alt(0, e - 1) + [E1], 1), ([E1], -vi))
        add("E1 (T0T1..T0) = E1/v", ([E1] + _alt(0, e - 1), 1), ([E1], -vi))
        for length in range(0, e):
            for first in ((0, 1) if length else (0,)):
                A = _alt(first, length)
                add(f"E0 A E1 = 0 (|A|={length})", ([E0] + A + [E1], 1))
                add(f"E1 A E0 = 0 (|A|={length})", ([E1] + A + [E0], 1))
    return pres


# The inverse encodings: eight generators t0 t1 s3 e0 e1 f3 h0 h1 with h_i = T_i^{-1}
# (only h1 for e = 3).  Words are 1-based indices into that list.

def _inverse_words(e: int):
    M0 = [((7, 1), (1, 7)), ((7, 1), ()), ((8, 2), (2, 8)), ((8, 2), ())]
    braid = [((1, 3, 1), (3, 1, 3)), ((2, 3, 2), (3, 2, 3))]
    if e == 3:
        return None
    if e == 4:
        M1 = braid + [((1, 2, 1, 2), (2, 1, 2, 1)),
                      ((3, 2, 1, 8, 3), (2, 1, 8, 3, 2, 1, 8)),
                      ((3, 2, 1, 2, 7, 8, 3), (2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8))]
        M4 = [((6, 1, 6), (6,)), ((4, 3, 4), (4,)), ((6, 2, 6), (6,)), ((5, 3, 5), (5,)),
              ((6, 2, 1, 8, 6), (6,)), ((2, 4, 8, 3, 2, 4), (2, 4)), ((6, 2, 1, 2, 7, 8, 6), (6,)),
              ((5, 7, 8, 3, 2, 1, 5), (5,))]
        return M0, M1, M4
    if e == 5:
        M1 = braid + [((1, 2, 1, 2, 1), (2, 1, 2, 1, 2)),
                      ((3, 2, 1, 8, 3), (2, 1, 8, 3, 2, 1, 8)),
                      ((3, 2, 1, 2, 7, 8, 3), (2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8)),
                      ((3, 2, 1, 2, 1, 8, 7, 8, 3), (2, 1, 2, 1, 8, 7, 8, 3, 2, 1, 2, 1, 8, 7, 8))]
        M4 = [((6, 1, 6), (6,)), ((4, 3, 4), (4,)), ((4, 2, 4), (4,)), ((4, 2, 1, 2, 4), (4,)),
              ((5, 1, 5), (5,)), ((5, 1, 2, 1, 5), (5,)), ((6, 2, 6), (6,)), ((5, 3, 5), (5,)),
              ((6, 2, 1, 8, 6), (6,)), ((2, 4, 8, 3, 2, 4), (2, 4)), ((6, 2, 1, 2, 7, 8, 6), (6,)),
              ((2, 1, 5, 7, 8, 3, 2, 1, 5), (2, 1, 5)), ((6, 2, 1, 2, 1, 8, 7, 8, 6), (6,)),
              ((2, 1, 2, 4, 8, 7, 8, 3, 2, 1, 2, 4), (2, 1, 2, 4))]
        return M0, M1, M4
    if e == 6:
        M1 = braid + [((1, 2, 1, 2, 1, 2), (2, 1, 2, 1, 2, 1)),
                      ((3, 2, 1, 8, 3), (2, 1, 8, 3, 2, 1, 8)),
                      ((3, 2, 1, 2, 7, 8, 3), (2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8)),
                      ((3, 2, 1, 2, 1, 8, 7, 8, 3), (2, 1, 2, 1, 8, 7, 8, 3, 2, 1, 2, 1, 8, 7, 8)),
                      ((3, 2, 1, 2, 1, 2, 7, 8, 7, 8, 3),
                       (2, 1, 2, 1, 2, 7, 8, 7, 8, 3, 2, 1, 2, 1, 2, 7, 8, 7, 8))]
        M4 = [((6, 1, 6), (6,)), ((4, 3, 4), (4,)), ((6, 2, 6), (6,)), ((5, 3, 5), (5,)),
              ((6, 2, 1, 8, 6), (6,)), ((4, 8, 3, 2, 4), (4,)), ((6, 2, 1, 2, 7, 8, 6), (6,)),
              ((5, 7, 8, 3, 2, 1, 5), (5,)), ((6, 2, 1, 2, 1, 8, 7, 8, 6), (6,)),
              ((4, 8, 7, 8, 3, 2, 1, 2, 4), (4,)), ((6, 2, 1, 2, 1, 2, 7, 8, 7, 8, 6), (6,)),
              ((5, 7, 8, 7, 8, 3, 2, 1, 2, 1, 5), (5,))]
        return M0, M1, M4
    raise UnsupportedCase("the inverse encoding exists for e = 3, 4, 5, 6 only")


def _inverse_presentation(e: int, sc: dict) -> Presentation:
    l, m, v = sc["l"], sc["m"], sc["v"]
    rels: list = []
    labels: list = []

    def eq(lhs, rhs, c=1, tag=""):
        rels.append(_eq([i - 1 for i in lhs], [i - 1 for i in rhs], c))
        labels.append(tag or f"{list(lhs)} = {_fmt(_q(c))} {list(rhs)}")

    def quadratics():
        for eg, tg in ((4, 1), (5, 2), (6, 3)):
            rels.append(_rel(((eg - 1,), 1), ((tg - 1, tg - 1), -l / m), ((tg - 1,), -l), ((), l / m)))
            labels.append(f"[{eg}] = (l/m)([{tg},{tg}] + m[{tg}] - 1)")
        for tg, eg in ((1, 4), (2, 5), (3, 6)):
            eq((tg, eg), (eg,), 1 / l)

    if e == 3:
        names = BMW_NAMES + ["h1"]
        eq((7, 2), (2, 7)); eq((7, 2), ())
        eq((1, 2, 1), (2, 1, 2)); eq((1, 3, 1), (3, 1, 3)); eq((2, 3, 2), (3, 2, 3))
        eq((3, 2, 1, 7, 3, 2), (2, 1, 7, 3, 2, 1))
        quadratics()
        for wd in ((4, 2, 4), (5, 1, 5), (5, 3, 5), (6, 2, 6), (4, 3, 4), (6, 1, 6),
                   (6, 2, 1, 7, 6), (4, 7, 3, 2, 4)):
            eq(wd, (wd[-1],), l)
        return Presentation(names, rels, labels)
    M0, M1, M4 = _inverse_words(e)
    names = BMW_NAMES + ["h0", "h1"]
    for lhs, rhs in M0 + M1:
        eq(lhs, rhs)
    quadratics()
    for lhs, rhs in M4:
        eq(lhs, rhs, l)
    if e == 4:
        eq((2, 1, 2, 4), (4, 2, 1, 2)); eq((1, 2, 1, 5), (5, 1, 2, 1))
        eq((1, 2, 1, 2, 4), (4,), 1 / (l * v)); eq((1, 2, 1, 2, 5), (5,), 1 / (l * v))
        eq((4, 2, 4), (4,), 1 / v + l); eq((5, 1, 5), (5,), 1 / v + l)
        rels.append(_rel(((3, 4), 1))); labels.append("[4,5] = 0")
        rels.append(_rel(((4, 3), 1))); labels.append("[5,4] = 0")
    elif e == 5:
        eq((4, 5, 4), (4,)); eq((5, 4, 5), (5,))
        eq((4, 8, 7, 8, 4), (4,), 1 / l); eq((5, 7, 8, 7, 5), (5,), 1 / l)
    elif e == 6:
        eq((2, 1, 2, 1, 2, 4), (4, 2, 1, 2, 1, 2)); eq((1, 2, 1, 2, 1, 5), (5, 1, 2, 1, 2, 1))
        eq((1, 2, 1, 2, 1, 2, 4), (4,), 1 / (l * v)); eq((1, 2, 1, 2, 1, 2, 5), (5,), 1 / (l * v))
        eq((4, 2, 4), (4,), 1 / v + l); eq((5, 1, 5), (5,), 1 / v + l)
        rels.append(_rel(((3, 4), 1))); labels.append("[4,5] = 0")
        rels.append(_rel(((4, 3), 1))); labels.append("[5,4] = 0")
    return Presentation(names, rels, labels)


def presentation(spec: AlgebraSpec) -> Presentation:
    if spec.family.startswith("Hecke"):
        return hecke_presentation(spec)
    if spec.family == "BMW_een":
        return bmw_presentation(spec)
    return brauer_presentation(spec)


# ---------------------------------------------------------------- Lambda bases

def lambda_blocks(spec: AlgebraSpec) -> list:
    """The factor sets Lambda_i as lists of generator-name tuples."""
    n = spec.n
    if spec.family == "Hecke_een":
        e = spec.e

        def s(j):
            return "t0" if j == 2 else f"s{j}"

        blocks = [[()] + [(f"t{k}",) for k in range(e)] + [(f"t{k}", "t0") for k in range(1, e)]]
        for i in range(3, n + 1):
            down = [s(j) for j in range(i, 2, -1)]          # s_i ... s_3
            blk = [()]
            blk += [tuple(s(j) for j in range(i, ip - 1, -1)) for ip in range(i, 2, -1)]
            blk += [tuple(down) + (f"t{k}",) for k in range(e)]
            for k in range(1, e):
                for ip in range(2, i + 1):
                    blk.append(tuple(down) + (f"t{k}",) + tuple(s(j) for j in range(2, ip + 1)))
            blocks.append(blk)
        return blocks
    if spec.family == "Hecke_d1n":
        d = spec.d
        blocks = [[("z",) * k for k in range(d)]]
        for i in range(2, n + 1):
            down = tuple(f"s{j}" for j in range(i, 1, -1))   # s_i ... s_2
            blk = [()]
            blk += [tuple(f"s{j}" for j in range(i, ip - 1, -1)) for ip in range(i, 1, -1)]
            blk += [down + ("z",) * k for k in range(1, d)]
            for k in range(1, d):
                for ip in range(2, i + 1):
                    blk.append(down + ("z",) * k + tuple(f"s{j}" for j in range(2, ip + 1)))
            blocks.append(blk)
        return blocks
    raise BadSpec("Lambda bases exist for the Hecke families only")


def lambda_basis(spec: AlgebraSpec) -> list:
    """All products a_1 a_2 ... of the Lambda_i, as generator-name tuples."""
    return [sum(parts, ()) for parts in product(*lambda_blocks(spec))]


@dataclass
class LambdaReport:
    size: int
    dimension: int
    rank: int

    @property
    def ok(self) -> bool:
        return self.size == self.dimension == self.rank


@dataclass
class Computed:
    """A presentation together with its completed Groebner basis and quotient basis."""
    spec: AlgebraSpec
    pres: Presentation
    gb: ncgb.GroebnerBasis
    qb: ncgb.QuotientBasis

    @property
    def dimension(self) -> int:
        return len(self.qb)

    def word(self, text_or_names) -> bytes:
        if isinstance(text_or_names, str):
            return bytes(self.pres.word(text_or_names))
        return bytes(self.pres.index(t) for t in text_or_names)

    def reduce(self, pairs: Iterable) -> dict:
        """Normal form of sum c * word for (word_text, c) pairs."""
        F = self.gb.F
        p = ncgb.NcPoly.from_pairs(((self.word(w), c) for w, c in pairs), F)
        return self.gb.reduce(p).terms


def compute(spec: AlgebraSpec, field: ncgb.Field | None = None, degree_cap: int = 24,
            progress=None) -> Computed:
    F = field or ncgb.QQ
    pres = presentation(spec)
    gb = ncgb.groebner(pres.polys(F), F, pres.ngens, degree_cap, names=pres.names, progress=progress)
    if not gb.complete:
        from .errors import CapExceeded
        raise CapExceeded(f"completion did not stabilize below degree {degree_cap}", partial=gb)
    return Computed(spec, pres, gb, ncgb.quotient_basis(gb))


def dimension(spec: AlgebraSpec, field: ncgb.Field | None = None, degree_cap: int = 24, progress=None) -> int:
    return compute(spec, field, degree_cap, progress).dimension


def verify_lambda_basis(spec: AlgebraSpec, field: ncgb.Field | None = None,
                        words: list | None = None, computed: Computed | None = None) -> LambdaReport:
    """Rank of the coordinate matrix of Lambda in the quotient basis."""
    c = computed or compute(spec, field)
    if not c.gb.complete:
        raise IncompleteBasis("Groebner basis incomplete")
    words = lambda_basis(spec) if words is None else words
    rows = [ncgb.coordinates(c.gb.normal_word(c.word(w)), c.qb, c.gb.F) for w in words]
    return LambdaReport(len(words), c.dimension, ncgb.rank_of(rows, c.gb.F))


def verify_identity(c: Computed, lhs: Iterable, rhs: Iterable) -> bool:
    """True when sum(lhs) - sum(rhs) reduces to zero; sides are (word_text, coeff) pairs."""
    if not c.gb.complete:
        raise IncompleteBasis("Groebner basis incomplete")
    pairs = list(lhs) + [(w, -_q(k)) for w, k in rhs]
    return not c.reduce(pairs)


# ---------------------------------------------------------------- experiment: trace form

@dataclass
class TraceFormReport:
    """Rank of (x, y) -> trace of left multiplication by xy, on the quotient basis.

    Full rank proves semisimplicity over the coefficient field.  A rank drop
    over F_p says nothing about characteristic 0.  Experimental: nothing in
    the package depends on it.
    """
    dimension: int
    rank: int
    field: str

    @property
    def nondegenerate(self) -> bool:
        return self.rank == self.dimension


def trace_form(c: Computed, progress=None) -> TraceFormReport:
    gb, qb, F = c.gb, c.qb, c.gb.F
    mono = qb.monomials
    zero = F(0)
    # tau(b_m) = sum_k [b_k] (b_m b_k), the trace of left multiplication by b_m
    tau = []
    for m, bm in enumerate(mono):
        acc = zero
        for bk in mono:
            acc = acc + gb.normal_word(bm + bk).get(bk, zero)
        tau.append(acc % F.p if F.p else acc)
        if progress and m % 50 == 0:
            progress(f"tau {m}/{len(mono)}")
    rows = []
    for bi in mono:
        row = []
        for bj in mono:
            v = zero
            for wd, coef in gb.normal_word(bi + bj).items():
                v = v + coef * tau[qb.index[wd]]
            row.append(v % F.p if F.p else v)
        rows.append(row)
    return TraceFormReport(len(mono), ncgb.rank_of(rows, F), repr(F))


__all__ = ["TraceFormReport", "trace_form", "AlgebraSpec", "Presentation", "hecke", "hecke_d1n", "bmw", "brauer", "hecke_presentation",
           "bmw_presentation", "brauer_presentation", "presentation", "bmw_scalars", "lambda_blocks",
           "lambda_basis", "LambdaReport", "Computed", "compute", "dimension", "verify_lambda_basis",
           "verify_identity", "BMW_NAMES"]
