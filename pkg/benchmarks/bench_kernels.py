"""Time the modular resultant grid on catalog entries for both kernel backends.

    python benchmarks/bench_kernels.py [--ids I43 I52] [--repeat 3]

Both backends are imported directly, so the environment variable does not
matter here.  Outputs are compared cell by cell before timings are printed.
"""

import argparse
import random
import time

import numpy as np

from painleve6.catalog import load_catalog
from painleve6.kernels import _numba, _numpy
from painleve6.modular import Elimination, primes_1mod4, sqrt_minus_one


def grid_inputs(entry, p, seed=0):
    E = Elimination.of(entry.solution("text"))
    A1, A2 = E.arrays(p, sqrt_minus_one(p))
    bu, bx = E.bounds()
    rng = random.Random(seed)
    pts = rng.sample(range(1, p), bu + bx + 2)
    us = np.array(pts[: bu + 1], dtype=np.int64)
    xs = np.array(pts[bu + 1:], dtype=np.int64)
    return A1, A2, us, xs


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--ids", nargs="+", default=["I21", "I43", "I50"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    cat = load_catalog()
    p = primes_1mod4(1)[0]
    # compile outside the timed region
    _numba.resultant_grid(*grid_inputs(cat["II"], p), p)
    print(f"{'id':6s}{'grid':>12s}{'numba s':>10s}{'numpy s':>10s}{'speedup':>9s}")
    for i in args.ids:
        A1, A2, us, xs = grid_inputs(cat[i], p)
        tn, (vn, okn) = best_of(lambda: _numba.resultant_grid(A1, A2, us, xs, p), args.repeat)
        tp, (vp, okp) = best_of(lambda: _numpy.resultant_grid(A1, A2, us, xs, p), max(1, args.repeat // 3))
        mask = okn & okp
        if not np.array_equal(vn[mask], vp[mask]):
            raise SystemExit(f"{i}: backends disagree")
        shape = f"{len(us)}x{len(xs)}"
        print(f"{i:6s}{shape:>12s}{tn:10.3f}{tp:10.3f}{tp / tn:9.1f}")


if __name__ == "__main__":
    main()
