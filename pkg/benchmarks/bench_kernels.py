"""Compare the numba and pure-numpy kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is checked for identical output before timing.  The first
numba call (compilation or cache load) is excluded.
"""
import argparse
import time

import numpy as np

from wittstack.kernels import _numpy as npk
from wittstack.kernels import numba_backend as nbk
from wittstack.witt import all_vectors, gen_witt_polys


def witt_table_args(p, n, kind):
    ps = gen_witt_polys(p, n, kind)
    exps, coeffs, owner = ps.packed()
    v = all_vectors(p, n)
    idx = np.array([(a, b) for a in range(len(v)) for b in range(len(v))])
    pairs = np.hstack([v[idx[:, 0]], v[idx[:, 1]]])
    return exps, coeffs, owner, n, pairs, p


def workloads():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 7, 2000).astype(np.int64)
    b = rng.integers(0, 7, 2000).astype(np.int64)
    unit = rng.integers(0, 5, 800).astype(np.int64)
    unit[0] = 1
    mat = rng.integers(0, 3, (200, 200)).astype(np.int64)
    return [
        ("poly_mul 2000x2000 mod 7", "poly_mul", (a, b, 7)),
        ("series_inv 800 terms mod 5", "series_inv", (unit, 800, 5)),
        ("rank 200x200 mod 3", "rank_mod_p", (mat, 3)),
        ("W_4(F_2) mul table", "eval_polys", witt_table_args(2, 4, "mul")),
        ("W_2(F_7) add table", "eval_polys", witt_table_args(7, 2, "add")),
    ]


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        fresh = tuple(x.copy() if isinstance(x, np.ndarray) else x for x in args)
        t0 = time.perf_counter()
        fn(*fresh)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if nbk is None:
        print("numba is not installed; only the numpy backend is available")
    print(f"{'workload':32s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>8s}")
    for label, name, wargs in workloads():
        f_np = getattr(npk, name)
        t_np = best_of(f_np, wargs, args.repeat)
        if nbk is None:
            print(f"{label:32s} {t_np * 1e3:12.2f} {'-':>12s} {'-':>8s}")
            continue
        f_nb = getattr(nbk, name)
        ref = f_np(*[x.copy() if isinstance(x, np.ndarray) else x for x in wargs])
        got = f_nb(*[x.copy() if isinstance(x, np.ndarray) else x for x in wargs])
        assert np.array_equal(np.asarray(ref), np.asarray(got)), f"backends disagree on {label}"
        t_nb = best_of(f_nb, wargs, args.repeat)
        print(f"{label:32s} {t_np * 1e3:12.2f} {t_nb * 1e3:12.2f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
