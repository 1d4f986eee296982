"""Integral homology of B^(k)(e,e,n) from the order complex of its Garside monoid.

Cells, the recursive differential and the trivial-coefficient matrices follow
the right-divisibility conventions: lcm(A) is the least common left multiple
of the atoms in A, and d(f) is the least atom dividing f on the right.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .errors import MatrixTooLarge
from .garside import GarsideElement, GarsideMonoid
from .interval import left_divides
from .group_core import multiply

ONE = GarsideElement(0, ())


class Complex:
    """Cells and differentials for one monoid B^{+k}(e,e,n)."""

    def __init__(self, M: GarsideMonoid):
        self.M = M
        e, n = M.e, M.n
        # s_n < ... < s_3 < t_0 < ... < t_{e-1}
        self.order = [f"s{j}" for j in range(n, 2, -1)] + [f"t{i}" for i in range(e)]
        self.atom_matrix = {t: M.atoms[M.tokens.index(t)] for t in self.order}
        self.atom = {t: M.from_simple(self.atom_matrix[t]) for t in self.order}
        self._lcm_cache: dict = {}
        self._cells: dict = {}

    # -- monoid arithmetic on positive elements

    def mul(self, a: GarsideElement, b: GarsideElement) -> GarsideElement:
        return self.M.multiply(a, b)

    def over(self, a: GarsideElement, b: GarsideElement) -> GarsideElement:
        """a b^-1."""
        return self.M.multiply(a, self.M.inverse(b))

    def under(self, a: GarsideElement, b: GarsideElement) -> GarsideElement:
        """a^-1 b."""
        return self.M.multiply(self.M.inverse(a), b)

    def right_divisible(self, f: GarsideElement, t: str) -> bool:
        return self.over(f, self.atom[t]).pd >= 0

    def d(self, f: GarsideElement) -> str | None:
        for t in self.order:
            if self.right_divisible(f, t):
                return t
        return None

    def _head(self, x: GarsideElement):
        if x.pd > 0:
            return self.M.delta
        return x.seq[0] if x.seq else self.M.identity

    def _simple_meet(self, a, b):
        s = self.M.identity
        grown = True
        while grown:
            grown = False
            for g in self.M.atoms:
                c = multiply(s, g)
                if self.M.is_simple(c) and left_divides(c, a) and left_divides(c, b) \
                        and left_divides(s, c):
                    s, grown = c, True
                    break
        return s

    def left_gcd(self, P: GarsideElement, Q: GarsideElement) -> GarsideElement:
        g = ONE
        while True:
            h = self._simple_meet(self._head(P), self._head(Q))
            if h.is_identity():
                return g
            H = self.M.from_simple(h)
            g = self.mul(g, H)
            P, Q = self.under(H, P), self.under(H, Q)

    def left_lcm(self, f: GarsideElement, g: GarsideElement) -> GarsideElement:
        """Least common left multiple, via a gcd of Delta^r f^-1 and Delta^r g^-1."""
        if f == ONE:
            return g
        if g == ONE or f == g:
            return f
        r = max(f.pd + len(f.seq), g.pd + len(g.seq))
        D = GarsideElement(r, ())
        w = self.left_gcd(self.over(D, f), self.over(D, g))
        return self.under(w, D)

    def lcm_of(self, cell: tuple) -> GarsideElement:
        hit = self._lcm_cache.get(cell)
        if hit is None:
            if not cell:
                hit = ONE
            elif len(cell) == 1:
                hit = self.atom[cell[0]]
            else:
                hit = self.left_lcm(self.atom[cell[0]], self.lcm_of(cell[1:]))
            self._lcm_cache[cell] = hit
        return hit

    def alpha_over(self, alpha: str, cell: tuple) -> GarsideElement:
        """The element alpha_/A with alpha_/A lcm(A) = lcm(alpha, A)."""
        lA = self.lcm_of(cell)
        return self.over(self.lcm_of((alpha,) + cell), lA)

    # -- cells

    def cells(self, r: int) -> list[tuple]:
        if r in self._cells:
            return self._cells[r]
        if r == 0:
            out = [()]
        elif r == 1:
            out = [(t,) for t in self.order]
        else:
            pos = {t: i for i, t in enumerate(self.order)}
            out = []
            for a in self.order:
                for c in self.cells(r - 1):
                    if pos[a] < pos[c[0]] and self.d(self.lcm_of((a,) + c)) == a:
                        out.append((a,) + c)
        self._cells[r] = out
        return out

    # -- chains: dict (monoid element, cell) -> integer

    @staticmethod
    def _add(acc: dict, key, c: int):
        v = acc.get(key, 0) + c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)

    def _lmul(self, chain: dict, m: GarsideElement) -> dict:
        out: dict = {}
        for (x, cell), c in chain.items():
            self._add(out, (self.mul(m, x), cell), c)
        return out

    def s(self, chain: dict) -> dict:
        out: dict = {}
        for (x, cell), c in chain.items():
            for key, v in self._s_term(x, cell).items():
                self._add(out, key, c * v)
        return out

    def _s_term(self, x: GarsideElement, cell: tuple) -> dict:
        it = self.mul(x, self.lcm_of(cell))
        if it == ONE:
            return {}
        alpha = self.d(it)
        if cell and alpha == cell[0]:
            return {}
        aA = self.alpha_over(alpha, cell)
        y = self.over(x, aA)
        rest = self.s(self._lmul(self.u({(aA, cell): 1}), y))
        self._add(rest, (y, (alpha,) + cell), 1)
        return rest

    def u(self, chain: dict) -> dict:
        out: dict = {}
        for (x, cell), c in chain.items():
            if not cell:
                self._add(out, (ONE, ()), c)
            else:
                for key, v in self.s(self.boundary({(x, cell): 1})).items():
                    self._add(out, key, c * v)
        return out

    def boundary(self, chain: dict) -> dict:
        out: dict = {}
        for (x, cell), c in chain.items():
            for key, v in self._boundary_cell(cell).items():
                self._add(out, (self.mul(x, key[0]), key[1]), c * v)
        return out

    @lru_cache(maxsize=None)
    def _boundary_cached(self, cell: tuple) -> tuple:
        if not cell:
            return ()
        alpha = cell[0]
        if len(cell) == 1:
            return (((self.atom[alpha], ()), 1), ((ONE, ()), -1))
        A = cell[1:]
        aA = self.alpha_over(alpha, A)
        out = {(aA, A): 1}
        for key, v in self.u({(aA, A): 1}).items():
            self._add(out, key, -v)
        return tuple(out.items())

    def _boundary_cell(self, cell: tuple) -> dict:
        return dict(self._boundary_cached(cell))

    # -- matrices with trivial coefficients

    def differential_matrix(self, r: int, cap: int = 4000) -> list[list[int]]:
        """Matrix of d_r: rows are (r-1)-cells, columns are r-cells."""
        rows, cols = self.cells(r - 1), self.cells(r)
        if len(rows) > cap or len(cols) > cap:
            raise MatrixTooLarge(f"{len(rows)} x {len(cols)}")
        ridx = {c: i for i, c in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, cell in enumerate(cols):
            for (_, tgt), v in self._boundary_cell(cell).items():
                mat[ridx[tgt]][j] += v
        return mat



# ---------------------------------------------------------------- closed forms

def _kind(x: str, y: str) -> str:
    """'braid' for xyx = yxy, 'commute' for xy = yx, 'tt' for two t atoms."""
    if x[0] == "t" and y[0] == "t":
        return "tt"
    if x[0] == "t" or y[0] == "t":
        j = int((y if x[0] == "t" else x)[1:])
        return "braid" if j == 3 else "commute"
    return "braid" if abs(int(x[1:]) - int(y[1:])) == 1 else "commute"


def closed_form_boundary(C: Complex, cell: tuple) -> dict | None:
    """Hand-derived boundary of small cells, or None when no closed form is known.

    Each term is (sign, coefficient word, cell); words are products of atoms.
    """
    M = C.M
    e, k = M.e, M.k
    t = lambda i: f"t{i % e}"   # noqa: E731
    terms: list = []
    if len(cell) == 1:
        terms = [(1, cell[0], ()), (-1, "", ())]
    elif len(cell) == 2:
        x, y = cell
        kind = _kind(x, y)
        if kind == "tt":
            if x != "t0":
                return None
            i = int(y[1:])
            terms = [(1, t(i + k), (y,)), (-1, t(k), ("t0",)), (-1, "", (t(k),)), (1, "", (t(i + k),))]
        elif kind == "braid":
            terms = [(1, f"{y} {x}", (y,)), (1, "", (y,)), (-1, x, (y,)),
                     (1, y, (x,)), (-1, f"{x} {y}", (x,)), (-1, "", (x,))]
        else:
            terms = [(1, x, (y,)), (-1, "", (y,)), (-1, y, (x,)), (1, "", (x,))]
    elif len(cell) == 3:
        x, y, z = cell
        if y == "t0" and z[0] == "t" and x == "s3":
            j = int(z[1:])
            s3 = "s3"
            if (j + k) % e:
                a, b, c = t(j + 2 * k), t(j + k), t(2 * k)
                terms = [(1, f"s3 {t(k)} t0 s3", ("t0", z)), (-1, f"{t(k)} t0 s3", ("t0", z)),
                         (1, f"{a} s3", ("t0", z)), (-1, f"{a} s3 {b}", (s3, z)),
                         (1, a, (s3, b)), (-1, f"s3 {a}", (s3, b)),
                         (1, "s3", ("t0", b)), (-1, f"{a} s3", ("t0", b)), (-1, "", ("t0", b)),
                         (1, f"s3 {c}", (s3, t(k))), (-1, c, (s3, t(k))),
                         (1, f"{c} s3", ("t0", t(k))), (1, "", ("t0", t(k))), (-1, "s3", ("t0", t(k))),
                         (1, "", (s3, a)), (1, f"{c} s3 {t(k)}", (s3, "t0")), (-1, "", (s3, c))]
            else:
                c = t(2 * k)
                terms = [(1, f"s3 {t(k)} t0 s3", ("t0", z)), (-1, f"{t(k)} t0 s3", ("t0", z)),
                         (1, f"{t(k)} s3", ("t0", z)), (-1, f"{t(k)} s3 t0", (s3, z)),
                         (1, "", (s3, t(k))), (-1, c, (s3, t(k))), (1, f"s3 {c}", (s3, t(k))),
                         (1, "", ("t0", t(k))), (1, f"{c} s3", ("t0", t(k))), (-1, "s3", ("t0", t(k))),
                         (1, t(k), (s3, "t0")), (-1, f"s3 {t(k)}", (s3, "t0")),
                         (1, f"{c} s3 {t(k)}", (s3, "t0")), (-1, "", (s3, c))]
        elif y == "t0" and z[0] == "t" and x[0] == "s":
            i = int(z[1:])
            terms = [(1, x, ("t0", z)), (-1, "", ("t0", z)), (-1, t(i + k), (x, z)),
                     (1, t(k), (x, "t0")), (-1, "", (x, t(i + k))), (1, "", (x, t(k)))]
        elif "tt" not in (_kind(x, y), _kind(x, z), _kind(y, z)):
            kinds = (_kind(x, y), _kind(x, z), _kind(y, z))
            if kinds == ("braid", "commute", "braid"):
                terms = [(1, z, (x, y)), (1, f"{x} {y} {z}", (x, y)), (-1, f"{y} {z}", (x, y)),
                         (-1, "", (x, y)), (-1, "", (x, z)),
                         (1, f"{x} {z} {y}", (x, z)), (-1, f"{z} {y}", (x, z)), (-1, f"{x} {y}", (x, z)),
                         (1, y, (x, z)), (-1, f"{y} {x} {z} {y}", (x, z)),
                         (1, x, (y, z)), (-1, "", (y, z)), (-1, f"{y} {x}", (y, z)),
                         (1, f"{z} {y} {x}", (y, z))]
            elif kinds == ("braid", "commute", "commute"):
                terms = [(1, "", (y, z)), (-1, x, (y, z)), (1, f"{y} {x}", (y, z)),
                         (1, y, (x, z)), (-1, "", (x, z)), (-1, f"{x} {y}", (x, z)),
                         (1, z, (x, y)), (-1, "", (x, y))]
            elif kinds == ("commute", "commute", "braid"):
                terms = [(1, "", (x, y)), (1, f"{y} {z}", (x, y)), (-1, z, (x, y)),
                         (1, y, (x, z)), (-1, "", (x, z)), (-1, f"{z} {y}", (x, z)),
                         (1, x, (y, z)), (-1, "", (y, z))]
            elif kinds == ("commute", "commute", "commute"):
                terms = [(1, "", (x, z)), (-1, y, (x, z)), (1, z, (x, y)), (-1, "", (x, y)),
                         (1, x, (y, z)), (-1, "", (y, z))]
            else:
                return None
        else:
            return None
    else:
        return None
    out: dict = {}
    for sign, word, tgt in terms:
        C._add(out, (M.normal_form(word), tgt), sign)
    return out


# ---------------------------------------------------------------- Smith normal form

@dataclass
class SmithForm:
    factors: list           # nonzero invariant factors d_1 | d_2 | ...
    U: list | None = None   # U A V = D
    V: list | None = None


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A, transforms: bool = False) -> SmithForm:
    """Invariant factors of an integer matrix by pivoting on the least entry."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U = _identity(m) if transforms else None
    V = _identity(n) if transforms else None

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):      # row dst -= q * row src
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        if U is not None:
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):      # col dst -= q * col src
        for row in D:
            row[dst] -= q * row[src]
        if V is not None:
            for row in V:
                row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, D[i][t] // p)
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, D[t][j] // p)
                    if D[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t to the pivot
                cand = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
                cand += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, -1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1
    factors = [D[i][i] for i in range(min(m, n)) if D[i][i]]
    return SmithForm(factors, U, V) if transforms else SmithForm(factors)


def rank(A) -> int:
    return len(smith_normal_form(A).factors) if A and A[0] else 0


@dataclass(frozen=True)
class AbelianGroup:
    free: int
    torsion: tuple

    @classmethod
    def from_orders(cls, free: int, orders) -> "AbelianGroup":
        """Z^free times the product of Z/a over orders, in invariant-factor form."""
        m = len(orders)
        diag = [[a if i == j else 0 for j in range(m)] for i, a in enumerate(orders)]
        facs = smith_normal_form(diag).factors if m else []
        return cls(free, tuple(a for a in facs if a != 1))

    def __str__(self):
        parts = ["Z" if self.free == 1 else f"Z^{self.free}"] if self.free else []
        parts += [f"Z/{a}" for a in self.torsion]
        return " x ".join(parts) if parts else "0"


def homology_from_matrices(d_r, d_r1, n_cells: int) -> AbelianGroup:
    """ker d_r / im d_{r+1} for matrices with rows = target cells, columns = source cells."""
    rk_r = rank(d_r) if d_r and d_r[0] else 0
    snf = smith_normal_form(d_r1).factors if d_r1 and d_r1[0] else []
    free = n_cells - rk_r - len(snf)
    return AbelianGroup(free, tuple(a for a in snf if a != 1))


def homology_group(M: GarsideMonoid, r: int, complex_: Complex | None = None) -> AbelianGroup:
    C = complex_ or Complex(M)
    n_cells = len(C.cells(r))
    d_r = C.differential_matrix(r) if r >= 1 else []
    d_r1 = C.differential_matrix(r + 1)
    return homology_from_matrices(d_r, d_r1, n_cells)


def expected_h2_rank3(e: int, k: int) -> AbelianGroup:
    """The predicted H_2 for n = 3: Z^(gcd - 1) x Z/(e / gcd)."""
    g = math.gcd(e, k)
    return AbelianGroup.from_orders(g - 1, [e // g])


def trivialize(chain: dict) -> dict:
    """Replace every monoid coefficient by 1."""
    out: dict = defaultdict(int)
    for (_, cell), c in chain.items():
        out[cell] += c
    return {k: v for k, v in out.items() if v}


__all__ = ["Complex", "SmithForm", "smith_normal_form", "rank", "AbelianGroup",
           "homology_from_matrices", "homology_group", "expected_h2_rank3", "trivialize",
           "closed_form_boundary"]
