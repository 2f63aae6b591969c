"""Compare the compiled and numpy rank kernels.

    python benchmarks/bench_rank.py [--sizes 20 60 120] [--repeat 5]

Also times one slice of the oracle suite under each backend.
"""

import argparse
import time

import numpy as np

from scrollcert import linalg
from scrollcert.oracle import DEFAULT_PRIME, FieldConfig, verify_lemma_suite


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 120])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if linalg.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the numpy fallback only")
    rng = np.random.default_rng(0)
    p = DEFAULT_PRIME
    print(f"{'size':>6} " + " ".join(f"{b:>12}" for b in backends) + "   speedup")
    for n in args.sizes:
        M = rng.integers(0, p, size=(n, n + 3), dtype=np.int64)
        ranks = {b: linalg.rank_mod_p(M, p, backend=b) for b in backends}
        assert len(set(ranks.values())) == 1, ranks
        t = {b: best_of(lambda b=b: linalg.rank_mod_p(M, p, backend=b), args.repeat) for b in backends}
        speed = f"{t['python'] / t['cython']:8.1f}x" if "cython" in t else ""
        print(f"{n:>6} " + " ".join(f"{t[b] * 1e3:10.3f}ms" for b in backends) + f"   {speed}")

    print("\noracle slice (rank <= 3, degrees 0..3, m <= 6, ell <= 8):")
    for b in backends:
        cfg = FieldConfig(backend=b)
        t0 = time.perf_counter()
        rep = verify_lemma_suite(3, 0, 3, 6, 8, cfg)
        print(f"  {b:>7}: {rep.checks_run} checks, {len(rep.failures)} failures, {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
