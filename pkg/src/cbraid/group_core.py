"""Monomial-matrix arithmetic for the groups G(de,e,n).

An element is stored row by row: ``col[i]`` is the column of the unique
nonzero entry of row ``i`` (0-based) and ``exp[i]`` is the residue ``k``
such that this entry is ``zeta_{de}^k``.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (BadParams, GroupTooLarge, ParamMismatch, TokenOutOfRange,
                     UnknownToken, UsageError, ZNotAllowed)

DEFAULT_ENUM_CAP = 10 ** 7


@dataclass(frozen=True)
class GroupParams:
    d: int
    e: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1 or self.n < 2:
            raise BadParams(f"inadmissible parameters (d,e,n)=({self.d},{self.e},{self.n})")

    @property
    def de(self) -> int:
        return self.d * self.e

    @property
    def order(self) -> int:
        return self.d ** self.n * self.e ** (self.n - 1) * math.factorial(self.n)

    @property
    def family(self) -> str:
        """'een' for G(e,e,n), 'd1n' for G(d,1,n) with d > 1, 'deen' otherwise."""
        if self.d == 1:
            return "een"
        if self.e == 1:
            return "d1n"
        return "deen"

    def alphabet(self) -> list[str]:
        n = self.n
        if self.family == "d1n":
            return ["z"] + [f"s{j}" for j in range(2, n + 1)]
        toks = [f"t{i}" for i in range(self.de)] + [f"s{j}" for j in range(3, n + 1)]
        if self.family == "deen":
            toks.append("z")
        return toks

    def __str__(self):
        return f"G({self.de},{self.e},{self.n})"


def een(e: int, n: int) -> GroupParams:
    return GroupParams(1, e, n)


@dataclass(frozen=True)
class Element:
    params: GroupParams
    col: tuple
    exp: tuple

    def __post_init__(self):
        n, de = self.params.n, self.params.de
        if len(self.col) != n or len(self.exp) != n or sorted(self.col) != list(range(n)):
            raise BadParams("col must be a permutation of length n")
        if any(not 0 <= x < de for x in self.exp):
            object.__setattr__(self, "exp", tuple(x % de for x in self.exp))
        if sum(self.exp) % self.params.e:
            raise BadParams("product of the nonzero entries is not a d-th root of unity")

    @classmethod
    def identity(cls, params: GroupParams) -> "Element":
        return cls(params, tuple(range(params.n)), (0,) * params.n)

    def is_identity(self) -> bool:
        return self.col == tuple(range(len(self.col))) and not any(self.exp)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def inverse(self) -> "Element":
        return inverse(self)

    def entry(self, i: int, c: int):
        """Exponent of the entry at row i, column c (0-based), or None if zero."""
        return self.exp[i] if self.col[i] == c else None

    def row_of_col(self) -> tuple:
        rows = [0] * len(self.col)
        for i, c in enumerate(self.col):
            rows[c] = i
        return tuple(rows)

    def to_json(self) -> dict:
        p = self.params
        return {"d": p.d, "e": p.e, "n": p.n,
                "col": [c + 1 for c in self.col], "exp": list(self.exp)}

    @classmethod
    def from_json(cls, obj) -> "Element":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            p = GroupParams(int(obj.get("d", 1)), int(obj["e"]), int(obj["n"]))
            col = tuple(int(c) - 1 for c in obj["col"])
            exp = tuple(int(x) for x in obj["exp"])
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"malformed element JSON: {exc}") from None
        return cls(p, col, exp)

    def dense(self) -> list:
        """Matrix of exponents with None for zero entries (for display)."""
        n = len(self.col)
        rows = [[None] * n for _ in range(n)]
        for i, c in enumerate(self.col):
            rows[i][c] = self.exp[i]
        return rows

    def __str__(self):
        cells = []
        for row in self.dense():
            cells.append(" ".join("." if x is None else ("1" if x == 0 else f"z^{x}") for x in row))
        return "\n".join(cells)


def from_rows(params: GroupParams, rows: Sequence[Sequence]) -> Element:
    """Build an element from a dense matrix of exponents (None = zero entry)."""
    col, exp = [], []
    for row in rows:
        nz = [(c, x) for c, x in enumerate(row) if x is not None]
        if len(nz) != 1:
            raise BadParams("each row needs exactly one nonzero entry")
        col.append(nz[0][0])
        exp.append(nz[0][1])
    return Element(params, tuple(col), tuple(exp))


def diagonal(params: GroupParams, exps: Sequence[int]) -> Element:
    return Element(params, tuple(range(params.n)), tuple(exps))


def multiply(x: Element, y: Element) -> Element:
    if x.params != y.params:
        raise ParamMismatch(f"{x.params} vs {y.params}")
    de = x.params.de
    ycol, yexp = y.col, y.exp
    col = tuple(ycol[c] for c in x.col)
    exp = tuple((a + yexp[c]) % de for a, c in zip(x.exp, x.col))
    return Element(x.params, col, exp)


def inverse(x: Element) -> Element:
    n, de = x.params.n, x.params.de
    col = [0] * n
    exp = [0] * n
    for i, c in enumerate(x.col):
        col[c] = i
        exp[c] = (-x.exp[i]) % de
    return Element(x.params, tuple(col), tuple(exp))


# ---------------------------------------------------------------- words

_TOKEN_RE = re.compile(r"^([tsz])(\d*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class GenWord:
    params: GroupParams
    tokens: tuple

    def __str__(self):
        return " ".join(self.tokens)

    def __len__(self):
        return len(self.tokens)

    def __add__(self, other: "GenWord") -> "GenWord":
        if self.params != other.params:
            raise ParamMismatch("cannot concatenate words of different groups")
        return GenWord(self.params, self.tokens + other.tokens)


def canonical_token(tok: str, params: GroupParams) -> str:
    """Validate one token and return its canonical spelling."""
    m = _TOKEN_RE.match(tok)
    if not m or m.group(3) is not None:
        raise UnknownToken(tok)
    kind, idx = m.group(1), m.group(2)
    fam = params.family
    if kind == "z":
        if idx:
            raise UnknownToken(tok)
        if params.d == 1:
            raise ZNotAllowed("z is not a generator when d = 1")
        return "z"
    if not idx:
        raise UnknownToken(tok)
    i = int(idx)
    if kind == "t":
        if fam == "d1n":
            raise TokenOutOfRange(f"{tok}: G(d,1,n) has no t generators")
        if not 0 <= i < params.de:
            raise TokenOutOfRange(f"{tok}: index must lie in 0..{params.de - 1}")
        return f"t{i}"
    # s-generators
    if fam != "d1n" and i == 2:
        return "t0"
    lo = 2 if fam == "d1n" else 3
    if not lo <= i <= params.n:
        raise TokenOutOfRange(f"{tok}: index must lie in {lo}..{params.n}")
    return f"s{i}"


def parse_word(text: str, params: GroupParams) -> GenWord:
    """Parse whitespace or '.' separated tokens; ``x^k`` expands to k copies."""
    out = []
    for raw in re.split(r"[\s.]+", text.strip()):
        if not raw:
            continue
        base, _, power = raw.partition("^")
        reps = 1
        if power:
            try:
                reps = int(power)
            except ValueError:
                raise UnknownToken(raw) from None
            if reps < 0:
                raise UnknownToken(f"{raw}: negative powers are not words")
        tok = canonical_token(base, params)
        out.extend([tok] * reps)
    return GenWord(params, tuple(out))


def generator_element(tok: str, params: GroupParams) -> Element:
    tok = canonical_token(tok, params)
    n, de = params.n, params.de
    col = list(range(n))
    exp = [0] * n
    if tok == "z":
        exp[0] = params.e
    elif tok[0] == "t":
        i = int(tok[1:])
        col[0], col[1] = 1, 0
        exp[0] = (-i) % de
        exp[1] = i % de
    else:
        j = int(tok[1:])
        col[j - 2], col[j - 1] = j - 1, j - 2
    return Element(params, tuple(col), tuple(exp))


def evaluate(word: GenWord) -> Element:
    p = word.params
    cache = {}
    res = Element.identity(p)
    for tok in word.tokens:
        g = cache.get(tok)
        if g is None:
            g = cache[tok] = generator_element(tok, p)
        res = multiply(res, g)
    return res


def evaluate_text(text: str, params: GroupParams) -> Element:
    return evaluate(parse_word(text, params))


def enumerate_group(params: GroupParams, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Element]:
    """Yield every element once: permutations times admissible exponent vectors."""
    if params.order > cap:
        raise GroupTooLarge(f"|{params}| = {params.order} exceeds cap {cap}")
    n, de, e = params.n, params.de, params.e
    for perm in itertools.permutations(range(n)):
        for head in itertools.product(range(de), repeat=n - 1):
            r = (-sum(head)) % e
            for last in range(r, de, e):
                yield Element(params, perm, head + (last,))


def relation_catalog(params: GroupParams) -> list[tuple[str, str]]:
    """Defining relations (lhs, rhs) of the group presentation for ``params``."""
    n, e, d = params.n, params.e, params.d
    rels: list[tuple[str, str]] = []
    fam = params.family
    if fam == "d1n":
        rels.append(("z " * d, ""))
        rels.append(("z s2 z s2", "s2 z s2 z"))
        for j in range(3, n + 1):
            rels.append((f"z s{j}", f"s{j} z"))
        for i in range(2, n + 1):
            rels.append((f"s{i} s{i}", ""))
            for j in range(i + 1, n + 1):
                if j == i + 1:
                    rels.append((f"s{i} s{j} s{i}", f"s{j} s{i} s{j}"))
                else:
                    rels.append((f"s{i} s{j}", f"s{j} s{i}"))
        return rels
    de = params.de
    for i in range(de):
        for j in range(i + 1, de):
            rels.append((f"t{i} t{(i - 1) % de}", f"t{j} t{(j - 1) % de}"))
    for i in range(de):
        rels.append((f"t{i} t{i}", ""))
        if n >= 3:
            rels.append((f"t{i} s3 t{i}", f"s3 t{i} s3"))
        for j in range(4, n + 1):
            rels.append((f"s{j} t{i}", f"t{i} s{j}"))
    for i in range(3, n + 1):
        rels.append((f"s{i} s{i}", ""))
        for j in range(i + 1, n + 1):
            if j == i + 1:
                rels.append((f"s{i} s{j} s{i}", f"s{j} s{i} s{j}"))
            else:
                rels.append((f"s{i} s{j}", f"s{j} s{i}"))
    if fam == "deen":
        rels.append(("z " * d, ""))
        for i in range(de):
            rels.append((f"z t{i}", f"t{(i - e) % de} z"))
        for j in range(3, n + 1):
            rels.append((f"z s{j}", f"s{j} z"))
    return rels
