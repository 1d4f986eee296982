"""Explicit Krammer representations of B(3,3,3) (dimension 9) and B(4,4,3) (dimension 12).

A word w_1 ... w_k is represented by the product M_{w_1} ... M_{w_k} of its
letters' matrices; this is the order in which the defining relations hold.
Everything is exact over the rationals.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import _krammer_tables as tables
from .algebras import bmw, bmw_presentation
from .errors import BadSpec, SingularSpecialization

Matrix = list  # list of rows of Fractions


# ---------------------------------------------------------------- matrix helpers

def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def mat_add(a: Matrix, b: Matrix, c=1) -> Matrix:
    return [[x + c * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise SingularSpecialization("matrix is not invertible")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def to_json(a: Matrix) -> list:
    return [[str(x) for x in row] for row in a]


def from_json(rows: list) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


# ---------------------------------------------------------------- second encoding

def _sparse(n: int, entries: dict) -> Matrix:
    out = zeros(n)
    for (r, c), v in entries.items():
        out[r - 1][c - 1] = Fraction(v)
    return out


def _rho3_direct(m: Fraction, L: Fraction) -> dict:
    d = L - m
    L3 = L ** 3
    A = _sparse(9, {
        (1, 3): 1, (2, 4): 1, (3, 1): 1, (3, 3): -m, (3, 7): m * d / L3,
        (4, 2): 1, (4, 4): -m, (4, 7): m / L ** 6,
        (5, 2): m * m, (5, 4): m, (5, 6): 1, (5, 7): m / L ** 4,
        (6, 2): -(m ** 3 + m), (6, 4): -m * m, (6, 5): 1, (6, 6): -m,
        (7, 7): 1 / L3,
        (8, 1): -m * m / L3, (8, 2): -(m ** 3 + m), (8, 3): -m / L3, (8, 4): -m * m,
        (8, 7): (m * L ** 4 - m * m * L3 - (m ** 4 + m * m) * L + m ** 3) / L ** 7, (8, 9): 1,
        (9, 1): (m ** 3 + m) / L3, (9, 2): m ** 4 + 2 * m * m, (9, 3): m * m / L3, (9, 4): m ** 3 + m,
        (9, 7): -(m * m * L ** 4 - m * m * L * L + m ** 3 * L + m * L - m * m) / L ** 7,
        (9, 8): 1, (9, 9): -m,
    })
    B = _sparse(9, {
        (1, 1): 1 / L3, (2, 2): -m, (2, 6): 1 / d, (3, 7): d,
        (4, 1): -m / L3, (4, 3): -1 / L3, (4, 4): -m, (4, 6): 1, (4, 7): 1 / L3, (4, 9): L / (m * d),
        (5, 1): (m * L + m * m) / L ** 4, (5, 2): m * L, (5, 4): L, (5, 5): d,
        (5, 6): (m * m * L + m) / d, (5, 8): L / m, (5, 9): m * L / d,
        (6, 1): m / L ** 4, (6, 2): d,
        (7, 1): m / d, (7, 3): 1 / d, (7, 7): -m,
        (8, 1): -m ** 3 * (L3 - 2 * m * L * L - L + m) / (L ** 6 * d),
        (8, 2): -m * m * (L * L - L * m + m * m + 1) / L,
        (8, 3): m * (L * L - L * m + m * m) / (L ** 4 * d),
        (8, 4): -m * (L * L - L * m + m * m) / L,
        (8, 5): (-m * L * L + m * m * L + m) / L,
        (8, 6): -(m ** 3 * L + m * L + m * m) / d,
        (8, 7): -(m ** 3 + m) / L3, (8, 8): -L, (8, 9): -(m * m * L + L) / d,
        (9, 1): -2 * m * m * (L * L - 1) / L ** 6, (9, 2): -m * d * d / L, (9, 3): -m / L ** 4,
        (9, 4): m * d / L, (9, 7): m * d / L3,
    })
    C = _sparse(9, {
        (1, 1): -m, (1, 6): L, (2, 2): 1 / L3,
        (3, 1): m * m, (3, 2): m * L3, (3, 4): L3, (3, 5): L3, (3, 6): -m * L3, (3, 7): -m,
        (3, 8): L3 / m, (3, 9): -L3,
        (4, 7): 1 / L3,
        (5, 1): -m / L, (5, 2): (m * m * L + m) / L3, (5, 3): -1 / L, (5, 6): L * L, (5, 7): 1 / L,
        (5, 9): L * L / m,
        (6, 1): 1 / L, (6, 2): m * d / L3,
        (7, 2): m * L3, (7, 4): L3, (7, 7): -m,
        (8, 1): (m * m * L * L + m ** 4) / L3, (8, 2): -(m ** 3 * L * L + m ** 5 + m * m * L + m ** 3) / L ** 4,
        (8, 3): m * (L * L + m * m + 1) / L3, (8, 5): m * m / (L * L), (8, 6): -m * (L * L + m * m),
        (8, 7): -m * (L * L + m * m + 1) / L3, (8, 9): -(L * L + m * m),
        (9, 1): -m * (L - m) * (L + m) / L3, (9, 2): -m * m * (L * L - L * m + m * m) / L ** 4,
        (9, 3): m * m / L3, (9, 5): m * (L * L + 1) / (L * L), (9, 6): -m * m * (2 * L * L - 1) / (L * L),
        (9, 7): -m * m / L3, (9, 8): 1, (9, 9): -2 * m,
    })
    return {"A": A, "B": B, "C": C}


def _rho4_direct(u: Fraction, L: Fraction) -> dict:
    q = u ** 4 - 1
    D = u ** 4 - u * L - 1
    P = L * q ** 3 + u ** 3 * q * q - u * L * L * (2 * u ** 8 - 3 * u ** 4 + 2) - u * u * q * L ** 3
    A = _sparse(12, {
        (1, 1): 1 / L ** 2, (2, 6): 1, (3, 1): q / u ** 4, (3, 3): 1 / u ** 2, (4, 11): 1,
        (5, 1): q * (q * L + u ** 3) / (u ** 5 * L * L), (5, 9): L / u,
        (6, 1): -q * D / (u ** 4 * L * L), (6, 2): 1, (6, 6): -q / u ** 2,
        (7, 12): 1,
        (8, 1): (u ** 4 * q - q ** 4) / (u ** 8 * L * L), (8, 5): q / (u * L), (8, 9): -q * q / u ** 4,
        (8, 10): u / L,
        (9, 1): -q ** 3 / (u ** 6 * L * L), (9, 5): u / L, (9, 9): -q / u ** 2,
        (10, 1): -q ** 3 / (u ** 7 * L), (10, 8): L / u, (10, 9): -q * L / u ** 3, (10, 10): -q / u ** 2,
        (11, 1): -q * D / (u ** 5 * L), (11, 4): 1, (11, 11): -q / u ** 2,
        (12, 7): 1, (12, 12): -q / u ** 2,
    })
    B = _sparse(12, {
        (1, 3): 1, (2, 4): 1, (3, 1): 1, (3, 3): -q / u ** 2,
        (4, 2): 1, (4, 4): -q / u ** 2, (4, 7): q / u ** 6,
        (5, 1): q * q / u ** 4, (5, 2): q / u ** 2, (5, 3): q / u ** 2, (5, 6): 1, (5, 7): q / (u ** 5 * L),
        (6, 1): -(q ** 3 + u ** 4 * q) / u ** 6, (6, 2): -q * q / u ** 4, (6, 3): -q * q / u ** 4,
        (6, 4): -q / u ** 2, (6, 5): 1, (6, 6): -q / u ** 2,
        (7, 7): 1 / L ** 2,
        (8, 7): q * (u ** 5 * L + q) / (u ** 8 * L * L), (8, 9): 1,
        (9, 8): 1, (9, 9): -q / u ** 2,
        (10, 7): q / (u ** 7 * L), (10, 11): 1,
        (11, 10): 1, (11, 11): -q / u ** 2,
        (12, 7): q / u ** 4, (12, 12): 1 / u ** 2,
    })
    C = _sparse(12, {
        (1, 1): -q / u ** 2, (1, 2): -q / D, (1, 6): -u ** 2 / D,
        (2, 2): 1 / L ** 2,
        (3, 2): q * (q * L - u ** 3) / (u * u * L * D), (3, 3): -q / u ** 2, (3, 6): q / D,
        (3, 7): q / (u ** 4 * D), (3, 10): -u ** 3 / (L * D),
        (4, 7): L * L / u ** 4,
        (5, 2): q * q * (D - 2 * u * u * L * L) / (u ** 4 * L * L * D), (5, 4): q / (u * L),
        (5, 5): -q / u ** 2, (5, 6): -q / D, (5, 7): L * q * q / (u ** 7 * D), (5, 10): -q / D,
        (5, 11): u / L,
        (6, 1): -D / u ** 2,
        (7, 2): u * u * q / (L * L), (7, 4): u ** 4 / (L * L), (7, 7): -q / u ** 2,
        (8, 1): -(q ** 3 + u ** 4 * q) / u ** 6, (8, 2): q * P / (u ** 6 * L ** 3 * D),
        (8, 3): -q * q / u ** 4, (8, 4): q * q / (u ** 4 * L * L), (8, 6): -q / (u * u * D),
        (8, 7): -q * q * (q * q - u ** 5 * L) / (u ** 10 * D), (8, 8): 1 / u ** 2,
        (8, 10): -q * q / (L * D * u ** 3),
        (9, 1): -q ** 3 / u ** 8, (9, 2): q * (u * u * q - q * L * L - u ** 3 * L) / (u ** 3 * L ** 3 * D),
        (9, 3): -q * q / u ** 6, (9, 7): q * q / (u ** 8 * D), (9, 10): -q / (L * D * u), (9, 12): 1 / u ** 2,
        (10, 1): -L * q * (q - u * L) / u ** 5, (10, 2): q * q / (u ** 5 * L), (10, 3): -L * D / u ** 3,
        (10, 4): q / (u ** 3 * L), (10, 7): -L * q * q / u ** 9,
        (11, 1): -L * q * (q * L + u ** 3) / u ** 6, (11, 3): -q * L * L / u ** 4, (11, 5): L / u,
        (11, 7): -q * L * L / u ** 6,
        (12, 1): -q * q / u ** 4, (12, 3): -q / u ** 2, (12, 9): u * u, (12, 12): -q / u ** 2,
    })
    return {"A": A, "B": B, "C": C}


# ---------------------------------------------------------------- representations

@dataclass
class KrammerRep:
    which: str
    scalars: dict                       # (m, lambda) or (mu, lambda)
    T0: Matrix
    T1: Matrix
    S3: Matrix
    l: Fraction
    m: Fraction
    v: Fraction | None
    x: Fraction
    derived: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.T0)

    @property
    def e(self) -> int:
        return 3 if self.which == "rho3" else 4

    def E(self, T: Matrix) -> Matrix:
        """E = (l/m)(T^2 + mT - 1)."""
        n = self.size
        t2 = mat_mul(T, T)
        return mat_scale(mat_add(mat_add(t2, mat_scale(T, self.m)), identity(n), -1), self.l / self.m)

    def generators(self) -> dict:
        """Matrices of t0, t1, s3, e0, e1, f3 and the inverses h0 = T0^-1, h1 = T1^-1."""
        if not self.derived:
            self.derived = {
                "t0": self.T0, "t1": self.T1, "s3": self.S3,
                "e0": self.E(self.T0), "e1": self.E(self.T1), "f3": self.E(self.S3),
                "h0": mat_inverse(self.T0), "h1": mat_inverse(self.T1),
            }
        return self.derived

    def matrices_json(self) -> str:
        return json.dumps({"rep": self.which, "scalars": {k: str(v) for k, v in self.scalars.items()},
                           "A": to_json(self.T0), "B": to_json(self.T1), "C": to_json(self.S3)})


def _checked(build, *args) -> dict:
    try:
        return build(*args)
    except ZeroDivisionError:
        raise SingularSpecialization(f"a denominator vanishes at {args}") from None


def build_rho3(m, lam, double_check: bool = True) -> KrammerRep:
    """The 9-dimensional representation at (m, lambda); l = lambda^3."""
    m, lam = Fraction(m), Fraction(lam)
    if m == 0 or lam == 0 or lam == m:
        raise SingularSpecialization("need m != 0, lambda != 0 and lambda != m")
    env = {"m": m, "L": lam}
    mats = _checked(lambda: {k: tables.evaluate_table(v, env, tables.aux3()) for k, v in tables.RHO3.items()})
    if double_check:
        other = _checked(_rho3_direct, m, lam)
        _diff(mats, other, "rho3")
    l = lam ** 3
    x = (m * l - l * l + 1) / (m * l)
    return KrammerRep("rho3", {"m": m, "lambda": lam}, mats["A"], mats["B"], mats["C"], l, m, None, x)


def build_rho4(mu, lam, double_check: bool = True) -> KrammerRep:
    """The 12-dimensional representation at (mu, lambda); v = mu^2, l = lambda^2."""
    mu, lam = Fraction(mu), Fraction(lam)
    if mu == 0 or lam == 0 or mu ** 4 - mu * lam - 1 == 0:
        raise SingularSpecialization("need mu != 0, lambda != 0 and mu^4 - mu*lambda - 1 != 0")
    env = {"u": mu, "L": lam}
    mats = _checked(lambda: {k: tables.evaluate_table(v, env, tables.aux4()) for k, v in tables.RHO4.items()})
    if double_check:
        _diff(mats, _checked(_rho4_direct, mu, lam), "rho4")
    v = mu * mu
    m = v - 1 / v
    if m == 0:
        raise SingularSpecialization("mu^2 = +-1 makes m vanish")
    l = lam * lam
    x = (m * l - l * l + 1) / (m * l)
    return KrammerRep("rho4", {"mu": mu, "lambda": lam}, mats["A"], mats["B"], mats["C"], l, m, v, x)


class TranscriptionMismatch(AssertionError):
    pass


def _diff(a: dict, b: dict, name: str):
    for key in ("A", "B", "C"):
        for i, (ra, rb) in enumerate(zip(a[key], b[key])):
            for j, (x, y) in enumerate(zip(ra, rb)):
                if x != y:
                    raise TranscriptionMismatch(f"{name} {key}[{i + 1},{j + 1}]: {x} vs {y}")


def build(which: str, p1, p2) -> KrammerRep:
    if which == "rho3":
        return build_rho3(p1, p2)
    if which == "rho4":
        return build_rho4(p1, p2)
    raise BadSpec(f"unknown representation {which!r}")


# ---------------------------------------------------------------- checks

def word_matrix(rep_mats: dict | Sequence, word: Sequence, order: str = "forward") -> Matrix:
    """Matrix of a word: M_w1 ... M_wk (order='reversed' gives M_wk ... M_w1)."""
    seq = list(word)
    if order == "reversed":
        seq = seq[::-1]
    if not seq:
        first = next(iter(rep_mats.values())) if isinstance(rep_mats, dict) else rep_mats[0]
        return identity(len(first))
    out = rep_mats[seq[0]]
    for g in seq[1:]:
        out = mat_mul(out, rep_mats[g])
    return out


@dataclass
class RelationReport:
    results: list            # (label, ok)
    order: str

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failures(self) -> list:
        return [lab for lab, ok in self.results if not ok]


def presentation_for(rep: KrammerRep, encoding: str = "direct"):
    if rep.which == "rho3":
        spec = bmw(3, m=rep.m, l=rep.l, encoding=encoding)
    else:
        spec = bmw(4, v=rep.v, l=rep.l, encoding=encoding)
    return bmw_presentation(spec)


def verify_relations(rep: KrammerRep, encoding: str = "direct", order: str = "forward") -> RelationReport:
    """Evaluate every BMW relation on the representation matrices."""
    pres = presentation_for(rep, encoding)
    gens = rep.generators()
    mats = [gens[name] for name in pres.names]
    n = rep.size
    cache: dict = {(): identity(n)}

    def wm(word: tuple) -> Matrix:
        hit = cache.get(word)
        if hit is None:
            # extend by the last letter, respecting the chosen order convention
            prev = wm(word[:-1])
            g = mats[word[-1]]
            hit = mat_mul(g, prev) if order == "reversed" else mat_mul(prev, g)
            cache[word] = hit
        return hit

    results = []
    for label, rel in zip(pres.labels, pres.relations):
        acc = zeros(n)
        for word, c in rel:
            acc = mat_add(acc, wm(tuple(word)), c)
        results.append((label, is_zero(acc)))
    return RelationReport(results, order)


def algebra_dimension(matrices: Sequence[Matrix]) -> int:
    """Dimension of the unital algebra generated by the matrices."""
    from .ncgb import QQ
    n = len(matrices[0])
    matrices = [[[QQ(x) for x in row] for row in M] for M in matrices]
    basis: list = []          # echelon rows (flattened), with pivot columns
    pivots: list = []

    def insert(vec: list) -> bool:
        vec = list(vec)
        for row, p in zip(basis, pivots):
            if vec[p]:
                f = vec[p]
                vec = [a - f * b for a, b in zip(vec, row)]
        p = next((i for i, a in enumerate(vec) if a), None)
        if p is None:
            return False
        inv = 1 / vec[p]
        vec = [a * inv for a in vec]
        for k, row in enumerate(basis):
            if row[p]:
                f = row[p]
                basis[k] = [a - f * b for a, b in zip(row, vec)]
        basis.append(vec)
        pivots.append(p)
        return True

    flat = lambda M: [x for row in M for x in row]          # noqa: E731
    frontier = [[[QQ(x) for x in row] for row in identity(n)]]
    insert(flat(frontier[0]))
    while frontier:
        nxt = []
        for M in frontier:
            for g in matrices:
                P = mat_mul(M, g)
                if insert(flat(P)):
                    nxt.append(P)
        frontier = nxt
        if len(basis) == n * n:
            break
    return len(basis)


@dataclass
class TraceReport:
    value: Fraction
    expected: Fraction

    @property
    def ok(self) -> bool:
        return self.value == self.expected


def trace_check(rep: KrammerRep, swap_ab: bool = False) -> TraceReport:
    """trace(B A C) against 1/lambda (the swapped variant is a diagnostic only)."""
    A, B, C = rep.T0, rep.T1, rep.S3
    if swap_ab:
        A, B = B, A
    val = trace(mat_mul(mat_mul(B, A), C))
    return TraceReport(val, 1 / rep.scalars["lambda"])


def central_element(rep: KrammerRep) -> Matrix:
    """Image of (T1 T0 S3)^2."""
    g = rep.generators()
    w = word_matrix(g, ["t1", "t0", "s3"])
    return mat_mul(w, w)


def center_check(rep: KrammerRep) -> bool:
    """N_z^3 = lambda^-6 (rho3) as a scalar matrix."""
    N = central_element(rep)
    N3 = mat_mul(mat_mul(N, N), N)
    lam = rep.scalars["lambda"]
    return N3 == mat_scale(identity(rep.size), lam ** -6)


def idempotent_checks(rep: KrammerRep) -> dict:
    """E^2 = xE for e0, e1, f3; F3 E_k F3 = F3 for k = 0, 1 (reported, not asserted)."""
    g = rep.generators()
    out = {}
    for name in ("e0", "e1", "f3"):
        E = g[name]
        out[f"{name}^2 = x {name}"] = mat_mul(E, E) == mat_scale(E, rep.x)
    for k in ("e0", "e1"):
        F = g["f3"]
        out[f"f3 {k} f3 = f3"] = mat_mul(mat_mul(F, g[k]), F) == F
    return out


def cubic_check(rep: KrammerRep) -> dict:
    """(T - 1/l)(T^2 + mT - 1) = 0 for each T, the relation E T = E/l combined with the E formula."""
    n = rep.size
    out = {}
    for name, T in (("t0", rep.T0), ("t1", rep.T1), ("s3", rep.S3)):
        left = mat_add(T, identity(n), -1 / rep.l)
        right = mat_add(mat_add(mat_mul(T, T), mat_scale(T, rep.m)), identity(n), -1)
        out[name] = is_zero(mat_mul(left, right))
    return out


# ---------------------------------------------------------------- experiments

def comparison_rep(r, t) -> dict:
    """The 9-dimensional type A_2 comparison matrices at (r, t)."""
    env = {"r": Fraction(r), "t": Fraction(t)}
    return {k: tables.evaluate_table(v, env) for k, v in tables.KA2.items()}


def trace_comparison(r, t, max_len: int = 4) -> list:
    """Traces of rho3 and of the comparison representation on words in T0, S3.

    Uses m = r - 1/r and lambda = 1/(r t).  Returns (word, trace_rho3, trace_K)
    rows; equality on all rows is necessary (not sufficient) for isomorphism.
    """
    r, t = Fraction(r), Fraction(t)
    rep = build_rho3(r - 1 / r, 1 / (r * t))
    K = comparison_rep(r, t)
    ours = {"a": rep.T0, "c": rep.S3}
    theirs = {"a": K["T0"], "c": K["S3"]}
    rows = []
    words = [""]
    for _ in range(max_len):
        words = [w + g for w in words for g in "ac"]
        for w in words:
            rows.append((w, trace(word_matrix(ours, w)), trace(word_matrix(theirs, w))))
    return rows


def nontriviality_smoke(rep: KrammerRep, count: int = 1000, seed: int = 0, max_len: int = 12) -> dict:
    """Distinct Garside normal forms of B(e,e,3) should get distinct matrices (evidence only)."""
    from .garside import GarsideMonoid
    M = GarsideMonoid(rep.e, 3, 1)
    rng = random.Random(seed)
    g = rep.generators()
    # letters: t0, t1, s3 and inverses, as (token, exponent)
    letters = [("t0", 1), ("t1", 1), ("s3", 1), ("t0", -1), ("t1", -1), ("s3", -1)]
    mats = {("t0", 1): g["t0"], ("t1", 1): g["t1"], ("s3", 1): g["s3"],
            ("t0", -1): g["h0"], ("t1", -1): g["h1"], ("s3", -1): mat_inverse(g["s3"])}
    seen_nf: dict = {}
    attempts = 0
    while len(seen_nf) < count and attempts < 50 * count:
        attempts += 1
        word = [rng.choice(letters) for _ in range(rng.randint(0, max_len))]
        nf = M.normal_form(word)
        if nf in seen_nf:
            continue
        seen_nf[nf] = word
    images = {}
    collisions = 0
    for nf, word in seen_nf.items():
        key = tuple(tuple(row) for row in word_matrix(mats, word))
        if key in images:
            collisions += 1
        images[key] = nf
    return {"normal_forms": len(seen_nf), "distinct_images": len(images), "collisions": collisions}


__all__ = ["KrammerRep", "build_rho3", "build_rho4", "build", "verify_relations", "RelationReport",
           "algebra_dimension", "trace_check", "TraceReport", "center_check", "central_element",
           "idempotent_checks", "cubic_check", "comparison_rep", "trace_comparison", "nontriviality_smoke",
           "word_matrix", "mat_mul", "mat_inverse", "identity", "trace", "TranscriptionMismatch"]
