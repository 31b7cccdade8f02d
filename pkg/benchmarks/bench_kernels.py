"""Race the jitted kernels against the pure-python reference.

Both backends must return bit-identical results; the point of the jit
path is speed, not different answers.  Run directly:

    python3 benchmarks/bench_kernels.py
"""

import math
import time

import numpy as np

from fracture import _kernels
from fracture.core import HypergraphShape, edge_unrank


def edges_flat(n, r):
    shape = HypergraphShape(n, r)
    out = []
    for i in range(shape.edge_count):
        out.extend(edge_unrank(i, shape))
    return np.array(out, dtype=np.int64)


def time_call(fn, *args, repeat=3):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench_search_f(impl, n, k):
    m = math.comb(n, 2)
    flat = edges_flat(n, 2)
    prefix = np.empty(0, dtype=np.int64)
    witness = np.zeros(m, dtype=np.int64)
    res, secs = time_call(
        impl["search_f"], n, 2, k, m, flat, prefix, 2**62, n // 2, witness
    )
    return (res, witness.tolist()), secs


def bench_verify(impl, n, k, r):
    m = math.comb(n, r)
    flat = edges_flat(n, r)
    counter = np.zeros(m, dtype=np.int64)
    res, secs = time_call(impl["verify_kler"], n, r, k, m, flat, counter)
    return res, secs


def bench_bulk(impl, n, k, r, rows):
    m = math.comb(n, r)
    flat = edges_flat(n, r)
    colorings = np.random.default_rng(3).integers(0, k, size=(rows, m)).astype(np.int64)
    out = np.zeros((rows, 2), dtype=np.int64)
    res, secs = time_call(impl["bulk_eval"], n, r, k, m, flat, colorings, out)
    return out.tolist(), secs


def main():
    if "numba" not in _kernels.IMPLS:
        print("numba backend unavailable; nothing to race")
        return
    cases = [
        ("search_f n=7 k=3", lambda impl: bench_search_f(impl, 7, 3)),
        ("search_f n=8 k=3", lambda impl: bench_search_f(impl, 8, 3)),
        ("verify n=5 k=3 r=3", lambda impl: bench_verify(impl, 5, 3, 3)),
        ("bulk_eval 20000 rows n=8 k=6", lambda impl: bench_bulk(impl, 8, 6, 2, 20000)),
    ]
    # warm the jit cache outside the timed region
    bench_search_f(_kernels.IMPLS["numba"], 4, 2)
    bench_verify(_kernels.IMPLS["numba"], 4, 2, 2)
    bench_bulk(_kernels.IMPLS["numba"], 4, 2, 2, 4)

    print(f"{'case':<32} {'python':>10} {'numba':>10} {'speedup':>8}")
    for label, runner in cases:
        res_py, t_py = runner(_kernels.IMPLS["python"])
        res_nb, t_nb = runner(_kernels.IMPLS["numba"])
        assert res_py == res_nb, f"backend mismatch on {label}"
        print(f"{label:<32} {t_py:>9.4f}s {t_nb:>9.4f}s {t_py / t_nb:>7.1f}x")
    print("outputs identical across backends")


if __name__ == "__main__":
    main()
