"""Benchmark the group-algebra convolution kernel: compiled vs interpreted.

Times full-support products in the rank-4 group algebra (384 x 384 = 147456
coefficient pairs per product) and a realistic workload (squaring the whole
idempotent family).  Run:

    python benchmarks/bench_convolution.py [--rank 4] [--repeats 5]
"""

import argparse
import random
import statistics
import time

from hyperoct import kernels
from hyperoct.groupdata import get_group


def bench(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rank", type=int, default=4)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    group = get_group(args.rank)
    rng = random.Random(2718281828)
    idx = list(range(group.order))
    coef_a = [rng.randint(-99, 99) for _ in idx]
    coef_b = [rng.randint(-99, 99) for _ in idx]
    pairs = group.order**2

    print(f"rank {args.rank}: |group| = {group.order}, {pairs} pairs per product")
    print(f"selected backend at import: {kernels.BACKEND}")

    group.table_rows()  # pre-build the list form outside the timed region
    results = {}
    if kernels.BACKEND == "cython":
        best, med = bench(
            lambda: kernels.convolve_dense(group, idx, coef_a, idx, coef_b),
            args.repeats,
        )
        results["cython"] = best
        print(f"  cython : best {best * 1e3:8.2f} ms   ({pairs / best / 1e6:7.1f} Mpairs/s)")
    best, med = bench(
        lambda: kernels.convolve_dense_python(group, idx, coef_a, idx, coef_b),
        args.repeats,
    )
    results["python"] = best
    print(f"  python : best {best * 1e3:8.2f} ms   ({pairs / best / 1e6:7.1f} Mpairs/s)")
    if "cython" in results:
        print(f"  speedup: {results['python'] / results['cython']:.1f}x")

    # workload: square every idempotent in the signed-partition family
    from hyperoct.algebra import vazirani_idempotent
    from hyperoct.permutations import signed_partitions

    family = [vazirani_idempotent(lam) for lam in signed_partitions(args.rank)]

    def square_all():
        for e in family:
            _ = e * e

    best, med = bench(square_all, max(2, args.repeats // 2))
    print(
        f"  workload (square {len(family)} idempotents via selected backend): "
        f"best {best * 1e3:.1f} ms"
    )


if __name__ == "__main__":
    main()
