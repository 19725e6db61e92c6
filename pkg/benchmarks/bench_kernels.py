#!/usr/bin/env python3
"""Compare the compiled counting kernels against the numpy fallback.

Times the three per-trial kernels on realistic workloads (count vectors over
the full single-peaked ranking list at several electorate sizes) plus one
end-to-end simulation campaign per backend. Run from a checkout with the
extension built:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

import spvote.kernels.pure as pure
from spvote.elections import select_top_k
from spvote.generators import RandomSource, iac_count_vector, ranking_tables

try:
    import spvote.kernels._ckernels as ckernels
except ImportError:
    ckernels = None


def bench(fn, args_list, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / len(args_list)


def kernel_workload(m, n, trials=2000, seed=1):
    tab = ranking_tables(m)
    src = RandomSource(seed)
    vectors = [iac_count_vector(m, n, src.stream(t)) for t in range(trials)]
    mask = np.zeros(m, dtype=np.uint8)
    mask[: (m + 1) // 2] = 1
    return tab, vectors, mask


def trial_pipeline(impl, x, tab, k, n, mask):
    votes = impl.bloc_votes(x, tab.pos, k)
    select_top_k(votes.tolist(), k)
    t_mat = impl.pairwise_counts(x, tab.pos)
    wins = (2 * t_mat > n).sum(axis=1)
    ties = (t_mat == t_mat.T).sum(axis=1) - 1
    select_top_k((2 * wins + ties).tolist(), k)
    impl.block_sizes(x, tab.pos, mask)


def main():
    backends = [pure] + ([ckernels] if ckernels is not None else [])
    if ckernels is None:
        print("note: compiled kernels not built; only the fallback is timed")

    print(f"{'kernel':<28}{'m':>3}{'N':>7}" + "".join(f"{b.BACKEND:>12}" for b in backends) + f"{'speedup':>10}")
    for m, n in ((5, 1001), (7, 1001), (7, 10001)):
        tab, vectors, mask = kernel_workload(m, n)
        for name, call in (
            ("bloc_votes(k=2)", lambda impl, x: impl.bloc_votes(x, tab.pos, 2)),
            ("pairwise_counts", lambda impl, x: impl.pairwise_counts(x, tab.pos)),
            ("block_sizes", lambda impl, x: impl.block_sizes(x, tab.pos, mask)),
        ):
            times = [
                bench(lambda x, impl=impl: call(impl, x), [(x,) for x in vectors])
                for impl in backends
            ]
            cells = "".join(f"{t * 1e6:>10.2f}us" for t in times)
            speedup = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
            print(f"{name:<28}{m:>3}{n:>7}{cells}{speedup}")

    print()
    m, n, k, trials = 6, 1001, 2, 4000
    tab, vectors, mask = kernel_workload(m, n, trials=trials)
    for impl in backends:
        start = time.perf_counter()
        for x in vectors:
            trial_pipeline(impl, x, tab, k, n, mask)
        elapsed = time.perf_counter() - start
        print(
            f"full trial pipeline (m={m}, N={n}, {trials} trials): "
            f"{impl.BACKEND:<7} {elapsed:6.3f}s  ({elapsed / trials * 1e6:6.1f}us/trial)"
        )


if __name__ == "__main__":
    main()
