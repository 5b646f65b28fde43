"""Compare the compiled kernel extension against the pure-Python fallback.

Run:  python3 benchmarks/bench_backends.py
"""

import random
import time

from ffmin._core import pure

try:
    from ffmin._core import speedups
except ImportError:
    speedups = None


def bench(label, fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return time.perf_counter() - t0


def workloads():
    rng = random.Random(0)
    p = 10007
    a = [rng.randrange(p) for _ in range(60)]
    b = [rng.randrange(p) for _ in range(45)]
    b[-1] = b[-1] or 1
    mat = [[rng.randrange(p) for _ in range(50)] for _ in range(35)]
    # brute-force table shape from the inert genus-2 witness check over GF(7)
    base = [0]
    step = [0, 1]
    post = [rng.randrange(7) for _ in range(6)] + [3]
    yield "poly_mul deg 59 x 44", lambda m: (lambda: m.poly_mul(a, b, p)), 2000
    yield "poly_divmod deg 59 / 44", lambda m: (lambda: m.poly_divmod(a, b, p)), 2000
    yield "poly_gcd deg 59, 44", lambda m: (lambda: m.poly_gcd(a, b, p)), 400
    yield "nullspace 35x50", lambda m: (lambda: m.nullspace(mat, 50, p)), 200
    yield (
        "norm_table 7^5 rows",
        lambda m: (lambda: m.norm_table(base, step, post, 4, 7, 1, 24)),
        3,
    )


def main():
    print(f"{'workload':<26} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for label, make, reps in workloads():
        t_pure = bench(label, make(pure), reps)
        if speedups is None:
            print(f"{label:<26} {t_pure:>9.3f}s {'n/a':>10} {'-':>8}")
            continue
        t_fast = bench(label, make(speedups), reps)
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{label:<26} {t_pure:>9.3f}s {t_fast:>9.3f}s {ratio:>7.1f}x")
    if speedups is None:
        print("\ncompiled backend not built; install with a C toolchain to compare")


if __name__ == "__main__":
    main()
