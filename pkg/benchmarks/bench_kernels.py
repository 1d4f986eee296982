"""Compare the compiled and pure-Python reduction kernels on identical inputs.

Completes BMW(3,3,3) at m=2, l=17^3 over F_103 once, then reduces a fixed batch of
random words with each kernel and checks that both give the same normal forms.

    python3 benchmarks/bench_kernels.py [--words 3000] [--seed 1]
"""
import argparse
import random
import time

from cbraid import _kernels_py
from cbraid.algebras import bmw, presentation
from cbraid.ncgb import Field, groebner

try:
    from cbraid import _kernels
except ImportError:
    _kernels = None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--words", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--field", default="p103", help="p<prime> or q")
    args = ap.parse_args()
    F = Field(0 if args.field == "q" else int(args.field[1:]))
    pres = presentation(bmw(3, m=2, l=17 ** 3))
    t = time.perf_counter()
    gb = groebner(pres.polys(F), F, pres.ngens)
    print(f"completion ({gb.stats['backend']}): {time.perf_counter() - t:.2f}s, {len(gb)} rules")

    rng = random.Random(args.seed)
    batch = [{bytes(rng.randrange(pres.ngens) for _ in range(rng.randint(8, 14))): F(1)}
             for _ in range(args.words)]

    def run(mod):
        t0 = time.perf_counter()
        if F.p:
            res = [mod.reduce_mod_p(p, gb.rules, gb.lengths, F.p) for p in batch]
        else:
            res = [mod.reduce_exact(p, gb.rules, gb.lengths) for p in batch]
        return time.perf_counter() - t0, res

    tp, rp = run(_kernels_py)
    print(f"python kernel: {tp:.3f}s for {len(batch)} reductions")
    if _kernels is None:
        print("compiled kernel not built (pip install -e . with Cython available)")
        return
    tc, rc = run(_kernels)
    print(f"cython kernel: {tc:.3f}s for {len(batch)} reductions")
    print(f"speedup: {tp / tc:.2f}x, results identical: {rp == rc}")


if __name__ == "__main__":
    main()
