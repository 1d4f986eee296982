"""The interval Garside monoids B^{+k}(e,e,n) and left-greedy normal forms in their groups of fractions."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadK, NotCoprime, NotInInterval, ParamMismatch, TooLong, UnknownToken
from .group_core import Element, GroupParams, canonical_token, een, generator_element, inverse, multiply
from .interval import Interval, divides_lambda_k, interval_divisors
from .normal_form import is_left_descent, lambda_power, length, reduced_expression


@dataclass(frozen=True)
class GarsideElement:
    """Delta^pd followed by a left-greedy sequence of simples (no Delta, no identity)."""
    pd: int
    seq: tuple

    def is_identity(self) -> bool:
        return self.pd == 0 and not self.seq


def _element_order(x: Element) -> int:
    y, m = x, 1
    while not y.is_identity():
        y, m = multiply(y, x), m + 1
    return m


class GarsideMonoid:
    """B^{+k}(e,e,n) with simples the divisors of lambda^k in G(e,e,n)."""

    def __init__(self, e: int, n: int, k: int = 1, _rev: "GarsideMonoid | None" = None):
        if not 1 <= k <= e - 1:
            raise BadK(f"k must lie in 1..{e - 1}")
        self.params: GroupParams = een(e, n)
        self.e, self.n, self.k = e, n, k
        self.tokens = self.params.alphabet()
        self.atoms = [generator_element(t, self.params) for t in self.tokens]
        self.delta = lambda_power(self.params, k)
        self.delta_inv = inverse(self.delta)
        self.delta_order = _element_order(self.delta)
        self.identity = Element.identity(self.params)
        self._simples: Interval | None = None
        if _rev is not None:
            self._rev = _rev
        elif k == e - k:
            self._rev = self
        else:
            self._rev = None

    def __repr__(self):
        return f"GarsideMonoid(e={self.e}, n={self.n}, k={self.k})"

    @property
    def simples(self) -> Interval:
        if self._simples is None:
            self._simples = interval_divisors(self.params, self.k)
        return self._simples

    @property
    def rev(self) -> "GarsideMonoid":
        """The monoid for e - k that receives the reverse anti-isomorphism."""
        if self._rev is None:
            self._rev = GarsideMonoid(self.e, self.n, self.e - self.k, _rev=self)
        return self._rev

    # -- predicates on simples, all through the row criteria

    def is_simple(self, s: Element) -> bool:
        return divides_lambda_k(s, self.k)

    def left_descending(self, s: Element, i: int) -> bool:
        return is_left_descent(self.tokens[i], s)

    def right_ascending(self, s: Element, i: int) -> bool:
        # s * atom stays simple
        return is_left_descent(self.tokens[i], multiply(inverse(s), self.delta))

    def delta_action(self, s: Element, p: int) -> Element:
        """Delta^-p s Delta^p."""
        p %= self.delta_order
        d = Element.identity(self.params)
        for _ in range(p):
            d = multiply(d, self.delta)
        return multiply(multiply(inverse(d), s), d)

    # -- greedy normal form

    def normalize_pair(self, a: Element, b: Element) -> tuple:
        """Move atoms from the front of b to the end of a while a stays simple."""
        moved = True
        while moved:
            moved = False
            for i, g in enumerate(self.atoms):
                if self.left_descending(b, i) and self.right_ascending(a, i):
                    a, b = multiply(a, g), multiply(g, b)
                    moved = True
                    break
        return a, b

    def _clean(self, pd: int, seq: list) -> GarsideElement:
        seq = [s for s in seq if not s.is_identity()]
        while seq and seq[0] == self.delta:
            pd += 1
            seq.pop(0)
        return GarsideElement(pd, tuple(seq))

    def _append_simple(self, x: GarsideElement, s: Element) -> GarsideElement:
        seq = list(x.seq) + [s]
        i = len(seq) - 2
        while i >= 0:
            a, b = self.normalize_pair(seq[i], seq[i + 1])
            if (a, b) == (seq[i], seq[i + 1]):
                break
            seq[i], seq[i + 1] = a, b
            i -= 1
        return self._clean(x.pd, seq)

    def normalize(self, x: GarsideElement) -> GarsideElement:
        """Sweep adjacent pairs until the whole sequence is left-weighted."""
        seq = list(x.seq)
        changed = True
        while changed:
            changed = False
            for i in range(len(seq) - 1):
                a, b = self.normalize_pair(seq[i], seq[i + 1])
                if (a, b) != (seq[i], seq[i + 1]):
                    seq[i], seq[i + 1] = a, b
                    changed = True
            seq = [s for s in seq if not s.is_identity()]
        pd = x.pd
        while seq and seq[0] == self.delta:
            pd += 1
            seq.pop(0)
        return GarsideElement(pd, tuple(seq))

    def times_delta_power(self, x: GarsideElement, q: int) -> GarsideElement:
        """x * Delta^q."""
        return GarsideElement(x.pd + q, tuple(self.delta_action(s, q) for s in x.seq))

    def times_simple(self, x: GarsideElement, s: Element) -> GarsideElement:
        if not self.is_simple(s):
            raise NotInInterval("not a simple element")
        if s == self.delta:
            return self.times_delta_power(x, 1)
        if s.is_identity():
            return x
        return self._append_simple(x, s)

    def times_simple_inverse(self, x: GarsideElement, s: Element) -> GarsideElement:
        # s^-1 = Delta^-1 (Delta s^-1)
        return self.times_simple(self.times_delta_power(x, -1), multiply(self.delta, inverse(s)))

    def multiply(self, x: GarsideElement, y: GarsideElement) -> GarsideElement:
        out = self.times_delta_power(x, y.pd)
        for s in y.seq:
            out = self.times_simple(out, s)
        return out

    def inverse(self, x: GarsideElement) -> GarsideElement:
        out = GarsideElement(0, ())
        for s in reversed(x.seq):
            out = self.times_simple_inverse(out, s)
        return self.times_delta_power(out, -x.pd)

    def from_simple(self, s: Element) -> GarsideElement:
        return self.times_simple(GarsideElement(0, ()), s)

    # -- words

    def parse(self, text: str) -> list[tuple[str, int]]:
        """Tokens with integer powers; 'd' stands for Delta."""
        out = []
        for raw in re.split(r"[\s.]+", text.strip()):
            if not raw:
                continue
            base, _, power = raw.partition("^")
            try:
                p = int(power) if power else 1
            except ValueError:
                raise UnknownToken(raw) from None
            if base in ("d", "D"):
                out.append(("d", p))
            else:
                out.append((canonical_token(base, self.params), p))
        return out

    def normal_form(self, word) -> GarsideElement:
        """Left-greedy normal form of a word in atoms, their inverses and Delta."""
        toks = self.parse(word) if isinstance(word, str) else list(word)
        out = GarsideElement(0, ())
        for tok in toks:
            base, p = tok if isinstance(tok, tuple) else (tok, 1)
            if base == "d":
                out = self.times_delta_power(out, p)
                continue
            g = generator_element(base, self.params)
            for _ in range(abs(p)):
                out = self.times_simple(out, g) if p > 0 else self.times_simple_inverse(out, g)
        return out

    def head(self, word) -> Element:
        """Largest simple left-dividing a positive word."""
        x = self.normal_form(word)
        if x.pd < 0:
            raise ValueError("head is defined for positive elements")
        if x.pd > 0:
            return self.delta
        return x.seq[0] if x.seq else self.identity

    def equal(self, a: GarsideElement, b: GarsideElement) -> bool:
        return a == b

    def simple_word(self, s: Element) -> str:
        return str(reduced_expression(s))

    def format(self, x: GarsideElement) -> str:
        parts = []
        if x.pd:
            parts.append("d" if x.pd == 1 else f"d^{x.pd}")
        parts += [self.simple_word(s) for s in x.seq]
        return " . ".join(parts) if parts else "1"

    def relations(self) -> list[tuple[str, str]]:
        """Defining relations of B^{+k}(e,e,n)."""
        e, n, k = self.e, self.n, self.k
        rels = []
        for i in range(3, n + 1):
            for j in range(i + 1, n + 1):
                if j == i + 1:
                    rels.append((f"s{i} s{j} s{i}", f"s{j} s{i} s{j}"))
                else:
                    rels.append((f"s{i} s{j}", f"s{j} s{i}"))
        for i in range(e):
            if n >= 3:
                rels.append((f"s3 t{i} s3", f"t{i} s3 t{i}"))
            for j in range(4, n + 1):
                rels.append((f"s{j} t{i}", f"t{i} s{j}"))
        for i in range(e):
            for j in range(i + 1, e):
                rels.append((f"t{i} t{(i - k) % e}", f"t{j} t{(j - k) % e}"))
        return rels

    # -- reverse anti-isomorphism

    def reverse(self, x: GarsideElement) -> GarsideElement:
        """Image under the anti-isomorphism onto B^{+(e-k)} fixing each atom."""
        R = self.rev
        out = GarsideElement(0, ())
        for s in reversed(x.seq):
            out = R.times_simple(out, R.delta_action(inverse(s), x.pd))
        return R.multiply(GarsideElement(x.pd, ()), out)


def build_monoid(params_or_e, n: int | None = None, k: int = 1) -> GarsideMonoid:
    if isinstance(params_or_e, GroupParams):
        p = params_or_e
        if p.d != 1:
            raise BadK("Garside monoids are built for G(e,e,n) only")
        return GarsideMonoid(p.e, p.n, k)
    return GarsideMonoid(params_or_e, n, k)


def iso_to_corran_picantin(e: int, k: int) -> dict:
    """Generator map from B^{+1}(e,e,n) to B^{+k}(e,e,n) when gcd(k, e) = 1."""
    if math.gcd(k, e) != 1:
        raise NotCoprime(f"gcd({k},{e}) != 1")
    return {f"t{i}": f"t{(i * k) % e}" for i in range(e)}


def iso_check(e: int, n: int, k: int) -> bool:
    """Every defining relation of B^{+1} maps to an identity of B^{+k}."""
    mapping = iso_to_corran_picantin(e, k)
    M1, Mk = GarsideMonoid(e, n, 1), GarsideMonoid(e, n, k)
    tr = lambda w: " ".join(mapping.get(t, t) for t in w.split())   # noqa: E731
    return all(Mk.normal_form(tr(a)) == Mk.normal_form(tr(b)) for a, b in M1.relations())


# ---------------------------------------------------------------- Matsumoto property

def reduced_words(w: Element, limit: int = 8) -> list[tuple]:
    """All reduced expressions of w, by descent-guided depth-first search."""
    if length(w) > limit:
        raise TooLong(f"length {length(w)} exceeds {limit}")
    alph = w.params.alphabet()

    @lru_cache(maxsize=None)
    def rec(x: Element) -> tuple:
        if x.is_identity():
            return ((),)
        out = []
        for t in alph:
            if is_left_descent(t, x):
                rest = rec(multiply(generator_element(t, x.params), x))
                out.extend((t,) + r for r in rest)
        return tuple(out)

    return list(rec(w))


def _relation_moves(M: GarsideMonoid) -> list[tuple]:
    moves = []
    for a, b in M.relations():
        a, b = tuple(a.split()), tuple(b.split())
        moves.append((a, b))
        moves.append((b, a))
    return moves


def rewrite_closure(word: tuple, M: GarsideMonoid) -> set:
    """All words reachable from word by applying monoid relations anywhere."""
    moves = _relation_moves(M)
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for lhs, rhs in moves:
            L = len(lhs)
            for i in range(len(w) - L + 1):
                if w[i:i + L] == lhs:
                    v = w[:i] + rhs + w[i + L:]
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
    return seen


def matsumoto_check(w: Element, M: GarsideMonoid, limit: int = 8) -> bool:
    """All reduced expressions of a simple w give one monoid element.

    Checked twice: through the greedy normal form, and by word rewriting with
    the defining relations alone (the reduced words must form one class).
    """
    if w.params != M.params:
        raise ParamMismatch("element and monoid disagree")
    if not M.is_simple(w):
        raise NotInInterval("not a simple element")
    words = reduced_words(w, limit)
    forms = {M.normal_form(list(word)) for word in words}
    if len(forms) != 1:
        return False
    return set(words) <= rewrite_closure(words[0], M)


__all__ = ["GarsideElement", "GarsideMonoid", "build_monoid", "iso_to_corran_picantin", "iso_check",
           "reduced_words", "rewrite_closure", "matsumoto_check"]
