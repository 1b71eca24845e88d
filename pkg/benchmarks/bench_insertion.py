"""Times the row-insertion kernels: compiled extension vs pure Python.

Workload: Schensted row words of random rectangular product shapes, the
hot loop behind the R-matrix and energy routines. Run from the repo root:

    python3 benchmarks/bench_insertion.py
"""

import random
import statistics
import time

from kssbij import _insertion

try:
    from kssbij import _speedups
except ImportError:
    _speedups = None

from kssbij import kernels
from kssbij.tableaux import enumerate_kr, row_word


def make_words(rank_n, count, seed):
    rng = random.Random(seed)
    pool = []
    for r, s in ((1, 2), (2, 1), (2, 2), (1, 1)):
        if r <= rank_n:
            pool.extend(enumerate_kr(r, s, rank_n))
    words = []
    for _ in range(count):
        letters = []
        for t in rng.sample(pool, k=min(24, len(pool))):
            letters.extend(row_word(t))
        words.append(letters)
    return words


def bench(impl, words, repeats=5):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for letters in words:
            impl.insert_word([], letters)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times)


def main():
    words = make_words(rank_n=4, count=300, seed=11)
    cells = sum(len(w) for w in words)
    print(f"workload: {len(words)} words, {cells} letters total")
    print(f"selected backend at import: {kernels.BACKEND}")
    best_pure, mean_pure = bench(_insertion, words)
    print(f"pure-python: best {best_pure * 1e3:8.2f} ms   mean {mean_pure * 1e3:8.2f} ms")
    if _speedups is None:
        print("compiled:    extension not built, skipped")
        return
    best_c, mean_c = bench(_speedups, words)
    print(f"compiled:    best {best_c * 1e3:8.2f} ms   mean {mean_c * 1e3:8.2f} ms")
    print(f"speedup (best/best): {best_pure / best_c:.2f}x")


if __name__ == "__main__":
    main()
