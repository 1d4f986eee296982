"""Noncommutative Groebner bases over Q or F_p, quotient bases and multiplication matrices.

Generators are numbered 0, 1, ... and the monomial order is degree-lexicographic
with generator 0 smallest.  Words are stored as ``bytes``.
"""
from __future__ import annotations

import heapq
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .errors import BadSpec, CapExceeded, IncompleteBasis, InfiniteDimensional, ZeroRelation
from .kernels import BACKEND, reduce_exact, reduce_mod_p

try:
    from gmpy2 import mpq as _mpq
except ImportError:        # pragma: no cover - gmpy2 is optional
    _mpq = Fraction
_MPQ = type(_mpq(0))


# ---------------------------------------------------------------- fields

class Field:
    """Exact coefficient field: rationals (p = 0) or integers mod a prime p."""

    def __init__(self, p: int = 0):
        if p and (p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1))):
            raise BadSpec(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return "QQ" if not self.p else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(self.p)

    def __call__(self, x):
        """Coerce an int, Fraction, mpq or 'a/b' string."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.p:
            x = Fraction(x)
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        if isinstance(x, _MPQ):
            return x
        x = Fraction(x)
        return _mpq(x.numerator, x.denominator)

    def inv(self, a):
        return pow(a, -1, self.p) if self.p else 1 / a

    def to_fraction(self, a) -> Fraction:
        if self.p:
            return Fraction(int(a))
        return Fraction(int(a.numerator), int(a.denominator))

    def fmt(self, a) -> str:
        f = self.to_fraction(a)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


QQ = Field(0)


# ---------------------------------------------------------------- polynomials

def w(*idx: int) -> bytes:
    return bytes(idx)


def deglex_key(word: bytes):
    return (len(word), word)


@dataclass
class NcPoly:
    """A noncommutative polynomial: word (bytes) -> nonzero coefficient."""
    terms: dict = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, pairs: Iterable, F: Field) -> "NcPoly":
        out: dict = {}
        for word, c in pairs:
            word = bytes(word)
            v = out.get(word, F(0)) + F(c)
            if F.p:
                v %= F.p
            if v:
                out[word] = v
            else:
                out.pop(word, None)
        return cls(out)

    @classmethod
    def from_np(cls, np_form, F: Field) -> "NcPoly":
        """GBNP style [[words...], [coeffs...]] with 1-based generator numbers."""
        words, coeffs = np_form
        return cls.from_pairs(((tuple(i - 1 for i in wd), c) for wd, c in zip(words, coeffs)), F)

    def is_zero(self) -> bool:
        return not self.terms

    def lm(self) -> bytes:
        return max(self.terms, key=deglex_key)

    def __len__(self):
        return len(self.terms)


def poly_to_json(p: NcPoly, F: Field) -> dict:
    items = sorted(p.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)
    return {"terms": [{"word": [i + 1 for i in wd], "coeff": F.fmt(c)} for wd, c in items]}


def poly_from_json(obj, F: Field) -> NcPoly:
    try:
        return NcPoly.from_pairs(((tuple(int(i) - 1 for i in t["word"]), Fraction(str(t["coeff"])))
                                  for t in obj["terms"]), F)
    except (KeyError, TypeError, ValueError) as exc:
        raise BadSpec(f"malformed relation: {exc}") from None


def load_relations(path: str, F: Field) -> list[NcPoly]:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "relations" in data:
        data = data["relations"]
    if not isinstance(data, list):
        raise BadSpec("relation file must hold a JSON list or an object with 'relations'")
    return [poly_from_json(r, F) for r in data]


# ---------------------------------------------------------------- the basis

class GroebnerBasis:
    """Monic rules lm -> -tail, kept with pairwise non-divisible leading words."""

    def __init__(self, F: Field, ngens: int, names: list[str] | None = None):
        self.F = F
        self.ngens = ngens
        self.names = names or [f"x{i + 1}" for i in range(ngens)]
        self.rules: dict = {}          # lm -> tuple((word, coeff), ...)
        self.lengths: tuple = ()
        self.complete = False
        self.stats: dict = {}
        self._nf_cache: dict = {}

    def __len__(self):
        return len(self.rules)

    def _refresh(self):
        self.lengths = tuple(sorted({len(k) for k in self.rules}))
        self._nf_cache.clear()

    def reduce_terms(self, terms: dict) -> dict:
        if self.F.p:
            return reduce_mod_p(terms, self.rules, self.lengths, self.F.p)
        return reduce_exact(terms, self.rules, self.lengths)

    def reduce(self, p: NcPoly) -> NcPoly:
        return NcPoly(self.reduce_terms(p.terms))

    def normal_word(self, word: bytes) -> dict:
        """Normal form of one word, memoized."""
        hit = self._nf_cache.get(word)
        if hit is None:
            hit = self.reduce_terms({word: self.F(1)})
            self._nf_cache[word] = hit
        return hit

    def is_standard(self, word: bytes) -> bool:
        L = len(word)
        for ln in self.lengths:
            if ln > L:
                break
            for i in range(L - ln + 1):
                if word[i:i + ln] in self.rules:
                    return False
        return True

    def polys(self) -> list[NcPoly]:
        one = self.F(1)
        return [NcPoly({lm: one, **dict(tail)}) for lm, tail in self.rules.items()]


def _monic(terms: dict, F: Field):
    lm = max(terms, key=deglex_key)
    inv = F.inv(terms[lm])
    if F.p:
        tail = tuple((wd, c * inv % F.p) for wd, c in terms.items() if wd != lm)
    else:
        tail = tuple((wd, c * inv) for wd, c in terms.items() if wd != lm)
    tail = tuple(sorted(tail, key=lambda kv: deglex_key(kv[0]), reverse=True))
    return lm, tail


def _overlaps(u: bytes, v: bytes):
    """Proper overlaps: suffix of u equal to prefix of v, both sides left over."""
    for k in range(1, min(len(u), len(v))):
        if u[-k:] == v[:k]:
            yield k


def groebner(relations: list[NcPoly], F: Field, ngens: int, degree_cap: int = 24,
             names: list[str] | None = None, progress: Callable | None = None,
             raise_on_cap: bool = False) -> GroebnerBasis:
    """Buchberger completion processing obstructions by increasing degree."""
    gb = GroebnerBasis(F, ngens, names)
    queue: list = []           # (degree, serial, lm_f, lm_g, k)
    serial = 0
    pending = [r.terms for r in relations]
    if any(not t for t in pending):
        raise ZeroRelation("a relation is identically zero")
    t0 = time.time()
    reductions = 0
    skipped_cap = 0

    def add(terms: dict):
        nonlocal serial
        terms = gb.reduce_terms(terms)
        if not terms:
            return
        lm, tail = _monic(terms, F)
        # rules whose leading word contains lm become reducible: re-queue them
        dead = [k for k in gb.rules if lm in k]
        for k in dead:
            old_tail = gb.rules.pop(k)
            pending.append({k: F(1), **dict(old_tail)})
        gb.rules[lm] = tail
        gb._refresh()
        for other in list(gb.rules):
            for a, b in ((lm, other), (other, lm)) if other != lm else ((lm, lm),):
                for k in _overlaps(a, b):
                    deg = len(a) + len(b) - k
                    serial += 1
                    heapq.heappush(queue, (deg, serial, a, b, k))

    while pending or queue:
        while pending:
            add(pending.pop())
        if not queue:
            break
        deg, _, a, b, k = heapq.heappop(queue)
        if a not in gb.rules or b not in gb.rules:
            continue
        if deg > degree_cap:
            skipped_cap += 1
            continue
        # a * b[k:] - a[:-k] * b
        one = F(1)
        s: dict = {}
        ra, rb = b[k:], a[:-k]
        for wd, c in ((a, one),) + gb.rules[a]:
            s[wd + ra] = c
        for wd, c in ((b, one),) + gb.rules[b]:
            key = rb + wd
            v = s.get(key, 0) - c
            if F.p:
                v %= F.p
            if v:
                s[key] = v
            else:
                s.pop(key, None)
        reductions += 1
        if s:
            r = gb.reduce_terms(s)
            if r:
                pending.append(r)
        if progress and reductions % 2000 == 0:
            progress(f"obstructions={reductions} rules={len(gb.rules)} queue={len(queue)} "
                     f"degree={deg} elapsed={time.time() - t0:.0f}s")
    _interreduce(gb)
    gb.complete = skipped_cap == 0
    gb.stats = {"obstructions": reductions, "rules": len(gb.rules), "seconds": time.time() - t0,
                "skipped_over_cap": skipped_cap, "backend": BACKEND}
    if raise_on_cap and not gb.complete:
        raise CapExceeded(f"completion hit degree cap {degree_cap}", partial=gb)
    return gb


def _interreduce(gb: GroebnerBasis):
    """Reduce every tail so the stored rules are fully reduced."""
    F = gb.F
    new = {}
    for lm, tail in gb.rules.items():
        red = gb.reduce_terms(dict(tail)) if tail else {}
        new[lm] = tuple(sorted(red.items(), key=lambda kv: deglex_key(kv[0]), reverse=True))
    gb.rules = new
    gb._refresh()
    del F


# ---------------------------------------------------------------- quotient

@dataclass
class QuotientBasis:
    monomials: list
    finite: bool
    index: dict

    def __len__(self):
        return len(self.monomials)


def quotient_basis(gb: GroebnerBasis, bound: int = 200000) -> QuotientBasis:
    """Standard words by breadth-first growth, pruned at leading words.

    Whether a word stays standard depends only on its last (maxlen - 1) letters, so
    once the depth passes (maxlen - 1) + #states some suffix state repeats along a
    standard word and the quotient is infinite-dimensional.
    """
    if not gb.complete:
        raise IncompleteBasis("the Groebner basis is not complete")
    layer = [b""]
    out = [b""]
    if b"" in gb.rules:
        return QuotientBasis([], True, {})
    window = max(gb.lengths, default=1) - 1
    limit = None
    depth = 0
    while layer:
        if depth == window:
            limit = window + len(layer)
        if limit is not None and depth > limit:
            raise InfiniteDimensional("standard words of every length exist")
        depth += 1
        nxt = []
        for word in layer:
            for g in range(gb.ngens):
                cand = word + bytes((g,))
                # only suffixes can contain a new leading word
                ok = True
                L = len(cand)
                for ln in gb.lengths:
                    if ln > L:
                        break
                    if cand[L - ln:] in gb.rules:
                        ok = False
                        break
                if ok:
                    nxt.append(cand)
        out.extend(nxt)
        if len(out) > bound:
            raise InfiniteDimensional(f"more than {bound} standard words")
        layer = nxt
    out.sort(key=deglex_key)
    return QuotientBasis(out, True, {m: i for i, m in enumerate(out)})


def coordinates(terms: dict, qb: QuotientBasis, F: Field) -> list:
    row = [F(0)] * len(qb)
    for wd, c in terms.items():
        row[qb.index[wd]] = c
    return row


def mult_matrix(g: int, qb: QuotientBasis, gb: GroebnerBasis, side: str = "right") -> list:
    """Row i holds the normal form of b_i * g (or g * b_i for side='left')."""
    gg = bytes((g,))
    rows = []
    for b in qb.monomials:
        word = b + gg if side == "right" else gg + b
        rows.append(coordinates(gb.normal_word(word), qb, gb.F))
    return rows


def word_matrix(word: bytes, qb: QuotientBasis, gb: GroebnerBasis) -> list:
    return [coordinates(gb.normal_word(b + word), qb, gb.F) for b in qb.monomials]


def dimension(relations: list[NcPoly], F: Field, ngens: int, degree_cap: int = 24, **kw) -> int:
    gb = groebner(relations, F, ngens, degree_cap, **kw)
    if not gb.complete:
        raise CapExceeded(f"degree cap {degree_cap} reached", partial=gb)
    return len(quotient_basis(gb))


# ---------------------------------------------------------------- exact linear algebra

def rank_of(rows: list, F: Field) -> int:
    """Row rank by Gaussian elimination over F."""
    rows = [list(r) for r in rows if any(r)]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = F.inv(rows[rk][c])
        pr = rows[rk]
        for i in range(rk + 1, len(rows)):
            f = rows[i][c]
            if f:
                f = f * inv
                if F.p:
                    rows[i] = [(x - f * y) % F.p for x, y in zip(rows[i], pr)]
                else:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rk += 1
    return rk


__all__ = ["Field", "QQ", "NcPoly", "GroebnerBasis", "groebner", "QuotientBasis", "quotient_basis",
           "mult_matrix", "word_matrix", "coordinates", "dimension", "rank_of", "poly_to_json",
           "poly_from_json", "load_relations", "w", "deglex_key"]
