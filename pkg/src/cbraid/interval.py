"""Divisibility in G(e,e,n) and the lattice of divisors of lambda^k."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .errors import BadK, BadParams, GroupTooLarge, IntervalTooLarge, LatticeViolation, NotInInterval
from .group_core import (DEFAULT_ENUM_CAP, Element, GroupParams, enumerate_group, evaluate_text,
                         generator_element, inverse, multiply)
from .normal_form import is_left_descent, lambda_power, length

DEFAULT_INTERVAL_CAP = 10 ** 6


def _need_een(params: GroupParams):
    if params.d != 1:
        raise BadParams("intervals are only built for G(e,e,n)")


def _need_k(params: GroupParams, k: int):
    _need_een(params)
    if not 1 <= k <= params.e - 1:
        raise BadK(f"k must lie in 1..{params.e - 1}")


def left_divides(u: Element, w: Element) -> bool:
    """u precedes w in the prefix order: l(u) + l(u^-1 w) = l(w)."""
    return length(u) + length(multiply(inverse(u), w)) == length(w)


def right_divides(u: Element, w: Element) -> bool:
    """u is a suffix of w: l(w u^-1) + l(u) = l(w)."""
    return length(multiply(w, inverse(u))) + length(u) == length(w)


def phi(w: Element) -> Element:
    """The anti-automorphism t_i -> t_-i, s_j -> s_j; on matrices it is the transpose."""
    n = w.params.n
    col = [0] * n
    exp = [0] * n
    for i, c in enumerate(w.col):
        col[c] = i
        exp[c] = w.exp[i]
    return Element(w.params, tuple(col), tuple(exp))


# ---------------------------------------------------------------- bullets

@dataclass(frozen=True)
class BulletProfile:
    """Bullets of w and the split of all indices into Z(w) and Z'(w) (1-based)."""
    bullets: frozenset
    zone: dict = field(hash=False)

    def in_z(self, i: int, c: int) -> bool:
        return self.zone[(i, c)] == "Z"


def bullet_profile(w: Element) -> BulletProfile:
    n = w.params.n
    bullets = []
    lowest = n          # smallest column seen so far in earlier rows (0-based)
    for i, c in enumerate(w.col):
        if c < lowest:
            bullets.append((i + 1, c + 1))
            lowest = c
    zone = {}
    for i in range(1, n + 1):
        for c in range(1, n + 1):
            inside = any(i <= bi and c <= bc for bi, bc in bullets)
            zone[(i, c)] = "Z" if inside else "Z'"
    return BulletProfile(frozenset(bullets), zone)


def divides_lambda_k(w: Element, k: int) -> bool:
    """Matrix test for w in [1, lambda^k]: nonzero entries of Z'(w) are 1 or zeta^k."""
    p = w.params
    _need_k(p, k)
    prof = bullet_profile(w)
    for i, c in enumerate(w.col):
        if not prof.in_z(i + 1, c + 1) and w.exp[i] not in (0, k):
            return False
    return True


def is_balanced(w: Element, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Compare the left and right divisor sets of w over the whole group."""
    p = w.params
    if p.order > cap:
        raise GroupTooLarge(f"|{p}| exceeds cap {cap}")
    lw = length(w)
    for u in enumerate_group(p, cap):
        lu = length(u)
        if lu > lw:
            continue
        left = lu + length(multiply(inverse(u), w)) == lw
        right = length(multiply(w, inverse(u))) + lu == lw
        if left != right:
            return False
    return True


# ---------------------------------------------------------------- the interval

def predicted_size(params: GroupParams) -> int:
    """Size read off the RE_i catalog: product over i = 2..n of (e + 2i - 2)."""
    return math.prod(params.e + 2 * i - 2 for i in range(2, params.n + 1))


def _s(j: int) -> str:
    return "t0" if j == 2 else f"s{j}"


def catalog_blocks(params: GroupParams, k: int, i: int) -> list[tuple]:
    """All admissible RE_i blocks of an element of [1, lambda^k]."""
    e = params.e
    down = [_s(j) for j in range(i, 2, -1)]           # s_i ... s_3
    out = {tuple(_s(j) for j in range(i, ip - 1, -1)) for ip in range(2, i + 2)}
    out |= {tuple(down + [f"t{kk}"]) for kk in range(e)}
    out |= {tuple(down + [f"t{k}", "t0"] + [_s(j) for j in range(3, ip + 1)]) for ip in range(2, i + 1)}
    return sorted(out, key=lambda b: (len(b), b))


def catalog_elements(params: GroupParams, k: int) -> set:
    """Divisors of lambda^k built as products RE_2 ... RE_n of catalog blocks."""
    per_row = [catalog_blocks(params, k, i) for i in range(2, params.n + 1)]
    gens = {t: generator_element(t, params) for t in params.alphabet()}
    out = set()
    for combo in product(*per_row):
        w = Element.identity(params)
        for block in combo:
            for t in block:
                w = multiply(w, gens[t])
        out.add(w)
    return out


def exhaustive_elements(params: GroupParams, k: int, cap: int = DEFAULT_ENUM_CAP) -> set:
    lam = lambda_power(params, k)
    return {w for w in enumerate_group(params, cap) if left_divides(w, lam)}


class Interval:
    """The divisors of lambda^k with lazily built cover relation."""

    def __init__(self, params: GroupParams, k: int, elements):
        self.params = params
        self.k = k
        self.elements = frozenset(elements)
        self.delta = lambda_power(params, k)
        self._lengths = {w: length(w) for w in self.elements}
        self._hasse = None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda w: (self._lengths[w], w.col, w.exp)))

    def length_of(self, w: Element) -> int:
        return self._lengths[w]

    @property
    def atoms(self) -> list:
        p = self.params
        return [generator_element(t, p) for t in p.alphabet()]

    def hasse(self) -> list[tuple]:
        """Cover pairs (u, u*a) for atoms a with length going up by one."""
        if self._hasse is None:
            covers = []
            for u in self:
                for a in self.atoms:
                    w = multiply(u, a)
                    if w in self.elements and self._lengths[w] == self._lengths[u] + 1:
                        covers.append((u, w))
            self._hasse = covers
        return self._hasse

    def to_dot(self) -> str:
        from .normal_form import reduced_expression
        names = {w: (str(reduced_expression(w)) or "1") for w in self.elements}
        lines = [f'digraph "interval_{self.params.e}_{self.params.n}_{self.k}" {{', "  rankdir=BT;"]
        for w in self:
            lines.append(f'  "{names[w]}";')
        for u, w in self.hasse():
            lines.append(f'  "{names[u]}" -> "{names[w]}";')
        lines.append("}")
        return "\n".join(lines)


def interval_divisors(params: GroupParams, k: int, cap: int = DEFAULT_INTERVAL_CAP,
                      route: str = "auto") -> Interval:
    """Build [1, lambda^k].

    route "catalog" multiplies out the RE_i blocks, "exhaustive" tests every
    group element, "both" does both and insists they agree.  "auto" means
    "both" whenever the group is small enough to scan.
    """
    _need_k(params, k)
    if predicted_size(params) > cap:
        raise IntervalTooLarge(f"predicted {predicted_size(params)} elements exceeds cap {cap}")
    if route == "auto":
        route = "both" if params.order <= 20000 else "catalog"
    if route == "catalog":
        elems = catalog_elements(params, k)
    elif route == "exhaustive":
        elems = exhaustive_elements(params, k)
    else:
        elems = catalog_elements(params, k)
        brute = exhaustive_elements(params, k)
        if elems != brute:
            raise LatticeViolation(f"catalog gives {len(elems)} elements, exhaustive scan {len(brute)}")
    return Interval(params, k, elems)


# ---------------------------------------------------------------- lcm and gcd

def atom_join(x: str, y: str, params: GroupParams, k: int) -> Element:
    """Least common multiple of two atoms in [1, lambda^k] by the closed formulas."""
    if x == y:
        return generator_element(x, params)
    ev = lambda txt: evaluate_text(txt, params)   # noqa: E731
    if x[0] == "t" and y[0] == "t":
        return ev(f"t{k} t0")
    if y[0] == "t":
        x, y = y, x
    if x[0] == "t":
        j = int(y[1:])
        return ev(f"{x} s3 {x}") if j == 3 else ev(f"{x} {y}")
    i, j = sorted((int(x[1:]), int(y[1:])))
    return ev(f"s{i} s{j} s{i}") if j == i + 1 else ev(f"s{i} s{j}")


class JoinSolver:
    """Left lcm in [1, lambda^k] by recursive square completion, memoized."""

    def __init__(self, params: GroupParams, k: int, interval: Interval | None = None):
        _need_k(params, k)
        self.params = params
        self.k = k
        self.interval = interval
        self.atoms = [(t, generator_element(t, params)) for t in params.alphabet()]
        self.memo: dict = {}

    def _member(self, w: Element) -> bool:
        if self.interval is not None:
            return w in self.interval
        return divides_lambda_k(w, self.k)

    def _first_atom(self, w: Element):
        for t, g in self.atoms:
            if is_left_descent(t, w):
                return t, g
        raise AssertionError("nontrivial element without a left descent")

    def _quot(self, a: Element, b: Element) -> Element:
        # a^-1 b
        return multiply(inverse(a), b)

    def join(self, u: Element, v: Element) -> Element:
        for w in (u, v):
            if w.params != self.params or not self._member(w):
                raise NotInInterval("argument is not a divisor of lambda^k")
        return self._join(u, v)

    def _join(self, u: Element, v: Element) -> Element:
        if u.is_identity():
            return v
        if v.is_identity() or u == v:
            return u
        key = (u, v)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        x, gx = self._first_atom(u)
        y, gy = self._first_atom(v)
        u1, v1 = multiply(gx, u), multiply(gy, v)
        xy = atom_join(x, y, self.params, self.k)
        y1, x1 = self._quot(gx, xy), self._quot(gy, xy)
        a = self._join(x1, v1)                 # = v1 x2 = x1 v2
        v2 = self._quot(x1, a)
        b = self._join(y1, u1)                 # = u1 y2 = y1 u2
        y2, u2 = self._quot(u1, b), self._quot(y1, b)
        c = self._join(u2, v2)                 # = u2 v3
        v3 = self._quot(u2, c)
        res = multiply(multiply(u, y2), v3)
        self.memo[key] = res
        return res

    def right_join(self, u: Element, v: Element) -> Element:
        """lcm for the suffix order, transported through phi."""
        return phi(self.join(phi(u), phi(v)))


def join(u: Element, v: Element, k: int) -> Element:
    return JoinSolver(u.params, k).join(u, v)


def meet(u: Element, v: Element, k: int, interval: Interval | None = None) -> Element:
    """Greatest common left divisor: the join of all common divisors."""
    p = u.params
    if interval is None:
        interval = interval_divisors(p, k)
    for w in (u, v):
        if w not in interval:
            raise NotInInterval("argument is not a divisor of lambda^k")
    solver = JoinSolver(p, k, interval)
    acc = Element.identity(p)
    for w in interval:
        if left_divides(w, u) and left_divides(w, v):
            acc = solver._join(acc, w)
    return acc


# ---------------------------------------------------------------- verification

@dataclass
class LatticeReport:
    params: GroupParams
    k: int
    size: int
    pairs: int
    left_ok: bool
    right_ok: bool
    atoms_agree: bool
    failures: list

    @property
    def ok(self) -> bool:
        return self.left_ok and self.right_ok and self.atoms_agree

    def summary(self) -> str:
        state = "pass" if self.ok else "FAIL"
        return (f"{self.params} k={self.k}: {self.size} elements, {self.pairs} pairs, "
                f"left={self.left_ok} right={self.right_ok} atoms={self.atoms_agree}: {state}")


def _order_tables(elems: list, rel):
    idx = {w: i for i, w in enumerate(elems)}
    below = [0] * len(elems)   # bitmask of divisors
    above = [0] * len(elems)   # bitmask of multiples
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if rel(a, b):
                below[j] |= 1 << i
                above[i] |= 1 << j
    return idx, below, above


def _check_order(elems, idx, below, above, join_fn, failures, tag) -> bool:
    ok = True
    n = len(elems)
    for i in range(n):
        for j in range(i, n):
            common_up = above[i] & above[j]
            j_el = join_fn(elems[i], elems[j])
            ji = idx.get(j_el)
            # the join must be a common multiple dividing every common multiple
            if ji is None or not (common_up >> ji) & 1 or (common_up & ~above[ji]):
                ok = False
                failures.append((tag, "join", elems[i], elems[j]))
                continue
            common_down = below[i] & below[j]
            # a unique maximal common divisor: one of them is above all the others
            if not any((common_down & ~below[m]) == 0 for m in _bits(common_down)):
                ok = False
                failures.append((tag, "meet", elems[i], elems[j]))
    return ok


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def verify_lattice(params: GroupParams, k: int, raise_on_failure: bool = False) -> LatticeReport:
    """Exhaustive meet/join check for both divisibility orders on [1, lambda^k]."""
    interval = interval_divisors(params, k)
    elems = list(interval)
    solver = JoinSolver(params, k, interval)
    failures: list = []

    idx, below, above = _order_tables(elems, left_divides)
    left_ok = _check_order(elems, idx, below, above, solver.join, failures, "left")
    idx, below, above = _order_tables(elems, right_divides)
    right_ok = _check_order(elems, idx, below, above, solver.right_join, failures, "right")

    atoms_agree = True
    alph = params.alphabet()
    for x in alph:
        for y in alph:
            gx, gy = generator_element(x, params), generator_element(y, params)
            if solver.right_join(gx, gy) != atom_join(x, y, params, k):
                atoms_agree = False
                failures.append(("atoms", "right-join", x, y))
    n = len(elems)
    report = LatticeReport(params, k, n, n * (n + 1) // 2, left_ok, right_ok, atoms_agree, failures)
    if raise_on_failure and not report.ok:
        raise LatticeViolation(report.summary())
    return report


__all__ = ["left_divides", "right_divides", "phi", "BulletProfile", "bullet_profile",
           "divides_lambda_k", "is_balanced", "predicted_size", "catalog_blocks", "Interval",
           "interval_divisors", "atom_join", "JoinSolver", "join", "meet", "LatticeReport",
           "verify_lattice"]
