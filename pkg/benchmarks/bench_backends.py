#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Runs the three kernel workloads that dominate large verification
campaigns — inversion exponent vectors (the monomial hot path), plain
inversion counts, and componentwise dominance scans — on both backends
and prints a comparison table.  The compiled column is skipped when the
extension is not importable.

Usage: python3 benchmarks/bench_backends.py [--n 8] [--targets 200]
       [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from itertools import islice, permutations

from hookgh.kernels import PURE, backend

try:
    from hookgh import _speedups as COMPILED
except ImportError:
    COMPILED = None


def time_best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def exponent_workload(ns, words, n):
    def run():
        for w in words:
            ns.row_inv_exponents(w, n)
            ns.col_inv_exponents(w, n)
    return run


def count_workload(ns, words):
    def run():
        for w in words:
            ns.row_inv_count(w)
            ns.col_inv_count(w)
    return run


def dominance_workload(ns, vecs, targets):
    def run():
        hits = 0
        for t in targets:
            hits += ns.any_dominates(vecs, t)
        return hits
    return run


def check_agreement(words, n, vecs, targets):
    for w in islice(words, 500):
        assert PURE.row_inv_exponents(w, n) == COMPILED.row_inv_exponents(w, n)
        assert PURE.col_inv_exponents(w, n) == COMPILED.col_inv_exponents(w, n)
        assert PURE.row_inv_count(w) == COMPILED.row_inv_count(w)
        assert PURE.col_inv_count(w) == COMPILED.col_inv_count(w)
    for t in targets:
        assert PURE.any_dominates(vecs, t) == COMPILED.any_dominates(vecs, t)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=8,
                        help="word length for the kernel workloads")
    parser.add_argument("--targets", type=int, default=200,
                        help="number of dominance-scan targets")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement (best is kept)")
    args = parser.parse_args()

    words = list(permutations(range(1, args.n + 1)))
    vec_words = list(permutations(range(1, args.n)))
    vecs = [PURE.row_inv_exponents(w, args.n - 1) for w in vec_words]
    targets = [PURE.col_inv_exponents(w, args.n - 1)
               for w in islice(vec_words, args.targets)]

    print(f"active backend: {backend()}")
    print(f"{len(words)} words of length {args.n}; dominance pool "
          f"{len(vecs)} x {len(targets)} targets; best of {args.repeat}\n")

    jobs = [
        ("inversion exponent vectors",
         lambda ns: exponent_workload(ns, words, args.n)),
        ("inversion counts", lambda ns: count_workload(ns, words)),
        ("dominance scan", lambda ns: dominance_workload(ns, vecs, targets)),
    ]

    header = f"{'workload':<30}{'pure-python':>14}{'compiled':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, make in jobs:
        pure_ms = time_best(make(PURE), args.repeat)
        if COMPILED is None:
            print(f"{name:<30}{pure_ms:>11.1f} ms{'n/a':>14}{'':>10}")
            continue
        comp_ms = time_best(make(COMPILED), args.repeat)
        print(f"{name:<30}{pure_ms:>11.1f} ms{comp_ms:>11.1f} ms"
              f"{pure_ms / comp_ms:>9.1f}x")

    if COMPILED is None:
        print("\ncompiled extension not available; install with "
              "`pip install -e . --no-build-isolation` to build it")
    else:
        check_agreement(words, args.n, vecs, targets)
        print("\nbackends agree on all sampled inputs")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
