"""Command-line front end: ``python -m cbraid <subcommand> ...``.

Exit codes: 0 success, 1 computational failure (cap, singularity, ...), 2 usage error.
Defaults for the prime and the caps can be set with CBRAID_PRIME, CBRAID_DEGREE_CAP
and CBRAID_ENUM_CAP.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import CbraidError, UsageError

LONG_BMW = {5, 6}


@dataclass
class Config:
    enum_cap: int = 10 ** 7
    degree_cap: int = 24
    prime: int = 103
    threads: int = 1
    fmt: str = "text"

    def __post_init__(self):
        if self.enum_cap < 1 or self.degree_cap < 1 or self.threads < 1:
            raise UsageError("caps and thread count must be positive")
        if not _is_prime(self.prime):
            raise UsageError(f"{self.prime} is not prime")

    @classmethod
    def from_env(cls, env=None) -> "Config":
        env = os.environ if env is None else env
        try:
            return cls(enum_cap=int(env.get("CBRAID_ENUM_CAP", 10 ** 7)),
                       degree_cap=int(env.get("CBRAID_DEGREE_CAP", 24)),
                       prime=int(env.get("CBRAID_PRIME", 103)))
        except ValueError as exc:
            raise UsageError(f"bad environment setting: {exc}") from None


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- output helpers

def export_matrices(path, matrices: dict) -> list[Path]:
    """Write each integer matrix as ``name.txt``: a "rows cols" header then rows, space separated."""
    out = Path(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
        written = []
        for name in sorted(matrices):
            A = matrices[name]
            rows = len(A)
            cols = len(A[0]) if rows else 0
            lines = [f"{rows} {cols}"] + [" ".join(str(int(x)) for x in row) for row in A]
            f = out / f"{name}.txt"
            f.write_text("\n".join(lines) + "\n")
            written.append(f)
    except OSError as exc:
        raise CbraidError(f"cannot write matrices: {exc}") from None
    return written


def read_matrix(path) -> list[list[int]]:
    lines = Path(path).read_text().splitlines()
    rows, cols = (int(x) for x in lines[0].split())
    A = [[int(x) for x in ln.split()] for ln in lines[1:1 + rows]]
    if any(len(r) != cols for r in A):
        raise UsageError(f"{path}: ragged matrix")
    return A


def _emit(cfg: Config, text: str, data=None):
    if cfg.fmt == "json" and data is not None:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _heartbeat(msg: str):
    print(msg, file=sys.stderr, flush=True)


# ---------------------------------------------------------------- group commands

def _params(a):
    from .group_core import GroupParams
    return GroupParams(a.d, a.e, a.n)


def _element(a):
    from .group_core import Element, evaluate_text
    p = _params(a)
    if a.element:
        try:
            text = Path(a.element).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {a.element}: {exc}") from None
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed element JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise UsageError("element JSON must be an object")
        obj = {"d": a.d, "e": a.e, "n": a.n, **obj}
        w = Element.from_json(obj)
        if w.params != p:
            raise UsageError(f"element lives in {w.params}, not {p}")
        return w
    if a.word is None:
        raise UsageError("give --element FILE or --word WORD")
    return evaluate_text(a.word, p)


def cmd_nf(a, cfg):
    from .normal_form import check_against_bfs, reduced_expression
    w = _element(a)
    re_ = reduced_expression(w)
    word = str(re_) or "1"
    _emit(cfg, f"{word}\nlength {re_.length}", {"word": str(re_), "length": re_.length})
    if a.check_bfs:
        bad = check_against_bfs(w.params)
        print("bfs: ok" if not bad else f"bfs: {len(bad)} mismatches")
        return 0 if not bad else 1
    return 0


def cmd_length(a, cfg):
    from .normal_form import length
    n = length(_element(a))
    _emit(cfg, str(n), {"length": n})
    return 0


def cmd_descent(a, cfg):
    from .normal_form import left_descents
    ds = left_descents(_element(a))
    _emit(cfg, " ".join(ds), {"left_descents": ds})
    return 0


def cmd_longest(a, cfg):
    from .normal_form import longest_elements, reduced_expression
    info = longest_elements(_params(a))
    _emit(cfg, f"max_length {info.max_length}\ncount {info.count}",
          {"max_length": info.max_length, "count": info.count})
    if a.list:
        for w in info.witnesses:
            print(reduced_expression(w))
    return 0


def cmd_interval(a, cfg):
    from .group_core import een
    from .interval import interval_divisors, verify_lattice
    from .normal_form import reduced_expression
    p = een(a.e, a.n)
    if a.verify_lattice:
        rep = verify_lattice(p, a.k)
        print(rep.summary())
        return 0 if rep.ok else 1
    iv = interval_divisors(p, a.k, cap=cfg.enum_cap)
    if a.hasse_dot:
        print(iv.to_dot())
    elif a.list:
        for w in iv:
            print(str(reduced_expression(w)) or "1")
    else:
        _emit(cfg, str(len(iv.elements)), {"size": len(iv.elements)})
    return 0


def cmd_garside(a, cfg):
    from .garside import build_monoid, iso_check
    if a.action == "iso-check":
        ok = iso_check(a.e, a.n, a.k)
        print("ok" if ok else "failed")
        return 0 if ok else 1
    M = build_monoid(a.e, a.n, a.k)
    if a.action == "nf":
        if len(a.words) != 1:
            raise UsageError("nf takes one word")
        print(M.format(M.normal_form(a.words[0])))
        return 0
    if len(a.words) != 2:
        raise UsageError("eq takes two words")
    same = M.normal_form(a.words[0]) == M.normal_form(a.words[1])
    print("equal" if same else "different")
    return 0


def cmd_homology(a, cfg):
    from .garside import build_monoid
    from .homology import Complex, homology_group
    M = build_monoid(a.e, a.n, a.k)
    C = Complex(M)
    H = homology_group(M, a.degree, C)
    _emit(cfg, str(H), {"free": H.free, "torsion": list(H.torsion)})
    if a.export_matrices:
        r = a.degree
        mats = {f"d{j}": C.differential_matrix(j) for j in (r, r + 1) if j >= 1}
        export_matrices(a.export_matrices, mats)
    return 0


# ---------------------------------------------------------------- algebra commands

def _field(text: str | None, cfg: Config):
    from .ncgb import Field
    if text is None or text in ("q", "Q"):
        return Field(0)
    if text[0] in "pP":
        p = int(text[1:]) if len(text) > 1 else cfg.prime
        if not _is_prime(p):
            raise UsageError(f"{p} is not prime")
        return Field(p)
    raise UsageError(f"field must be q or p<prime>, got {text!r}")


def _dim_line(cfg, n):
    _emit(cfg, str(n), {"dimension": n})


def _declared_gens(path) -> int:
    data = json.loads(Path(path).read_text())
    return len(data.get("generators", ())) if isinstance(data, dict) else 0


def cmd_ncgb(a, cfg):
    from .errors import CapExceeded, InfiniteDimensional
    from .ncgb import dimension, load_relations
    F = _field(a.field, cfg)
    try:
        rels = load_relations(a.file, F)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {a.file}: {exc}") from None
    ngens = a.ngens or _declared_gens(a.file) or max((max(w) + 1 for p in rels for w in p.terms if w),
                                                      default=1)
    cap = a.cap or cfg.degree_cap
    try:
        _dim_line(cfg, dimension(rels, F, ngens, cap))
    except CapExceeded:
        print(f"UNKNOWN({cap})")
        return 1
    except InfiniteDimensional:
        print("INFINITE")
        return 0
    return 0


def _spec(a):
    from . import algebras as alg
    sc = {}
    for key in ("a", "m", "l", "v", "x"):
        val = getattr(a, key)
        if val is not None:
            sc[key] = Fraction(val)
    fam = a.family
    if fam == "hecke":
        if a.d > 1:
            b = [Fraction(x) for x in (a.b or [])]
            return alg.hecke_d1n(a.d, a.n, sc.pop("a", 2), b)
        return alg.AlgebraSpec("Hecke_een", 1, a.e, a.n, {"a": 2, **sc}, two_parameter=a.two_parameter)
    if fam == "bmw":
        return alg.bmw(a.e, a.n, a.encoding, **sc)
    if fam == "brauer":
        return alg.brauer(a.e, a.n, sc.get("x", 3))
    raise UsageError(f"unknown family {fam!r}")


def cmd_algebra(a, cfg):
    from . import algebras as alg
    spec = _spec(a)
    if spec.family in ("BMW_een", "Brauer_een") and spec.e in LONG_BMW and not a.long:
        raise UsageError(f"e = {spec.e} is a long job; pass --long to run it")
    if a.export:
        Path(a.export).write_text(alg.presentation(spec).dumps() + "\n")
    F = _field(a.field, cfg)
    progress = _heartbeat if a.long else None
    c = alg.compute(spec, F, a.cap or cfg.degree_cap, progress=progress)
    if a.action == "dim":
        _dim_line(cfg, c.dimension)
        return 0
    if a.action == "trace-form":
        tf = alg.trace_form(c, progress=progress)
        print(f"experiment: trace form rank {tf.rank} of {tf.dimension} over {tf.field}"
              + (" (nondegenerate, semisimple)" if tf.nondegenerate else " (degenerate)"))
        return 0
    rep = alg.verify_lambda_basis(spec, computed=c)
    _emit(cfg, f"lambda size {rep.size}, dimension {rep.dimension}, rank {rep.rank}: "
               + ("ok" if rep.ok else "FAILED"),
          {"size": rep.size, "dimension": rep.dimension, "rank": rep.rank, "ok": rep.ok})
    return 0 if rep.ok else 1


# ---------------------------------------------------------------- krammer commands

def _rep(a):
    from .krammer import build
    if a.lam is None:
        raise UsageError("--lambda is required")
    if a.rep == "rho3":
        if a.m is None:
            raise UsageError("rho3 needs --m and --lambda")
        return build("rho3", Fraction(a.m), Fraction(a.lam))
    if a.mu is None:
        raise UsageError("rho4 needs --mu and --lambda")
    return build("rho4", Fraction(a.mu), Fraction(a.lam))


def cmd_krammer(a, cfg):
    from . import krammer as kr
    if a.action == "compare-traces":
        if a.r is None or a.t is None:
            raise UsageError("compare-traces needs --r and --t")
        rows = kr.trace_comparison(Fraction(a.r), Fraction(a.t), a.max_len)
        same = sum(1 for _, x, y in rows if x == y)
        print(f"experiment: {same}/{len(rows)} traces agree (necessary, not sufficient, for isomorphism)")
        return 0
    rep = _rep(a)
    if a.export:
        Path(a.export).write_text(rep.matrices_json() + "\n")
    if a.action == "verify":
        report = kr.verify_relations(rep)
        for label, ok in report.results:
            print(f"{'ok  ' if ok else 'FAIL'} {label}")
        print(f"{len(report.results) - len(report.failures)}/{len(report.results)} relations hold")
        return 0 if report.ok else 1
    if a.action == "smoke":
        res = kr.nontriviality_smoke(rep, count=a.count, seed=a.seed)
        print(f"experiment: {res['normal_forms']} normal forms, {res['distinct_images']} distinct images")
        return 0
    if a.action == "dim":
        g = rep.generators()
        n = kr.algebra_dimension([g["t0"], g["t1"], g["s3"]])
        _dim_line(cfg, n)
        return 0
    tr = kr.trace_check(rep)
    _emit(cfg, f"trace(BAC) = {tr.value} (1/lambda = {tr.expected})",
          {"trace": str(tr.value), "expected": str(tr.expected)})
    return 0 if tr.ok else 1


# ---------------------------------------------------------------- parser

def _group_args(p, with_element=True):
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    if with_element:
        p.add_argument("--element", help="element JSON file (col 1-based, exp residues)")
        p.add_argument("--word", help="word in the generators, e.g. 't1 t0 s3'")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="cbraid", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=("text", "json"), default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=None)
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)

    p = sub.add_parser("nf", help="canonical reduced word of an element")
    _group_args(p)
    p.add_argument("--check-bfs", action="store_true")
    p.set_defaults(func=cmd_nf)
    for name, fn in (("length", cmd_length), ("descent", cmd_descent)):
        p = sub.add_parser(name)
        _group_args(p)
        p.set_defaults(func=fn)
    p = sub.add_parser("longest")
    _group_args(p, with_element=False)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_longest)

    p = sub.add_parser("interval", help="the divisors of lambda^k")
    for x in ("e", "n", "k"):
        p.add_argument(x, type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--hasse-dot", action="store_true")
    g.add_argument("--verify-lattice", action="store_true")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("garside", help="normal forms in B^{+k}(e,e,n)")
    for x in ("e", "n", "k"):
        p.add_argument(x, type=int)
    p.add_argument("action", choices=("nf", "eq", "iso-check"))
    p.add_argument("words", nargs="*")
    p.set_defaults(func=cmd_garside)

    p = sub.add_parser("homology")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--export-matrices", metavar="DIR")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("ncgb")
    p.add_argument("action", choices=("dim",))
    p.add_argument("file")
    p.add_argument("--field", default="q")
    p.add_argument("--cap", type=int)
    p.add_argument("--ngens", type=int)
    p.set_defaults(func=cmd_ncgb)

    p = sub.add_parser("algebra")
    p.add_argument("action", choices=("dim", "verify-lambda", "trace-form"),
                   help="trace-form is an experiment (semisimplicity evidence)")
    p.add_argument("--family", choices=("hecke", "bmw", "brauer"), required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n", type=int, default=3)
    for x in ("a", "m", "l", "v", "x"):
        p.add_argument(f"--{x}")
    p.add_argument("--b", nargs="*")
    p.add_argument("--two-parameter", action="store_true")
    p.add_argument("--encoding", choices=("direct", "inverse"), default="direct")
    p.add_argument("--field", default="q")
    p.add_argument("--cap", type=int)
    p.add_argument("--long", action="store_true")
    p.add_argument("--export", metavar="FILE", help="write the relations in JSON form")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("krammer")
    p.add_argument("action", choices=("verify", "dim", "trace", "smoke", "compare-traces"),
                   help="smoke and compare-traces are experiments (faithfulness evidence only)")
    p.add_argument("--rep", choices=("rho3", "rho4"), default="rho3")
    p.add_argument("--m")
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--r")
    p.add_argument("--t")
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--export", metavar="FILE", help="write A, B, C as JSON")
    p.set_defaults(func=cmd_krammer)
    return ap


def run(argv=None) -> int:
    try:
        cfg = Config.from_env()
        ap = build_parser()
        a = ap.parse_args(argv)
        if a.cmd is None:
            raise UsageError("missing subcommand")
        if a.format:
            cfg.fmt = a.format
        if a.threads:
            cfg.threads = a.threads
        return a.func(a, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CbraidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
