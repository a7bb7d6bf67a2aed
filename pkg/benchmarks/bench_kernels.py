"""Benchmark the compiled counting kernels against the pure-Python fallback.

Builds a random CSR-packed corpus layout (the same shape the library
feeds the kernels) and times classify_labels, pair_matrix and
pair_matrix_by_year on both backends. Outputs are compared for equality
before timing, so the numbers always describe identical work.

Usage: python benchmarks/bench_kernels.py [--records N] [--repeats K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from bibcollab import _kernels_py

try:
    from bibcollab import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def build_layout(n_records: int, vocab_size: int, seed: int):
    rng = np.random.default_rng(seed)
    sizes = rng.integers(1, 6, size=n_records)
    offsets = np.zeros(n_records + 1, dtype=np.int64)
    np.cumsum(sizes, out=offsets[1:])
    ids = np.empty(offsets[-1], dtype=np.int32)
    for i in range(n_records):
        k = int(sizes[i])
        members = rng.choice(vocab_size, size=k, replace=False)
        members.sort()
        ids[offsets[i] : offsets[i + 1]] = members
    years = rng.integers(1990, 2021, size=n_records).astype(np.int32)
    system_map = np.full(vocab_size, -1, dtype=np.int32)
    for idx, vocab_id in enumerate(rng.choice(vocab_size, size=6, replace=False)):
        system_map[vocab_id] = idx
    return offsets, ids, years, system_map


def best_of(repeats: int, func, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--records", type=int, default=200_000)
    parser.add_argument("--vocab", type=int, default=80)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _kernels_c is None:
        parser.error("compiled extension not built; reinstall the package first")

    offsets, ids, years, system_map = build_layout(args.records, args.vocab, args.seed)
    cases = [
        ("classify_labels", (offsets, ids, 0, 1)),
        ("pair_matrix", (offsets, ids, system_map, 6)),
        ("pair_matrix_by_year", (offsets, ids, years, 1990, 31, system_map, 6)),
    ]

    print(f"records={args.records} vocab={args.vocab} repeats={args.repeats}")
    print(f"{'kernel':<22}{'python':>12}{'cython':>12}{'speedup':>10}")
    for name, call_args in cases:
        py_func = getattr(_kernels_py, name)
        c_func = getattr(_kernels_c, name)
        if not np.array_equal(py_func(*call_args), c_func(*call_args)):
            raise SystemExit(f"{name}: backends disagree, refusing to time")
        py_time = best_of(args.repeats, py_func, *call_args)
        c_time = best_of(args.repeats, c_func, *call_args)
        print(f"{name:<22}{py_time:>11.4f}s{c_time:>11.4f}s{py_time / c_time:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
