"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the two hot kernels on representative workloads and prints a
comparison table.  Backend selection is forced per run, so this works
regardless of WORKBENCH_BACKEND in the environment.

    python benchmarks/bench_backends.py            # full workloads
    python benchmarks/bench_backends.py --quick    # smaller instances
"""
from __future__ import annotations

import argparse
import os
import time


def _force_backend(name: str):
    os.environ["WORKBENCH_BACKEND"] = name


def bench_weight_counts(q: int, h: int, backend: str, threads: int) -> tuple[float, dict]:
    _force_backend(backend)
    from codebench import CodeSpec, bch_build
    from codebench.weights import weight_distribution

    code = bch_build(CodeSpec(q=q, n=q + 1, delta=3, h=h))
    dual = code.dual()
    weight_distribution(dual, budget=1 << 34)  # warm-up/compile
    t0 = time.perf_counter()
    wd = weight_distribution(dual, budget=1 << 34, threads=threads)
    return time.perf_counter() - t0, wd.nonzero()


def bench_scan(q: int, h: int, backend: str) -> tuple[float, int]:
    _force_backend(backend)
    from codebench.designs import weight5_blocks_rank

    weight5_blocks_rank(q, h, budget=1 << 34)  # warm-up/compile
    t0 = time.perf_counter()
    blocks = weight5_blocks_rank(q, h, budget=1 << 34)
    return time.perf_counter() - t0, len(blocks)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    wq, wh = (27, 12) if args.quick else (243, 4)
    sq, sh = (9, 3) if args.quick else (27, 12)

    print(f"weight distribution of dual(C_({wq},{wq+1},3,{wh}))")
    rows = []
    for backend in ("numba", "numpy"):
        dt, nz = bench_weight_counts(wq, wh, backend, args.threads)
        rows.append((backend, dt))
        print(f"  {backend:>6}: {dt:8.2f} s   nonzero weights {sorted(nz)}")
    if rows[1][1] > 0:
        print(f"  speedup numba vs numpy: {rows[1][1] / max(rows[0][1], 1e-9):.1f}x")

    print(f"weight-5 support scan of C_({sq},{sq+1},3,{sh}) (C({sq+1},5) subsets)")
    rows = []
    for backend in ("numba", "numpy"):
        dt, nblocks = bench_scan(sq, sh, backend)
        rows.append((backend, dt))
        print(f"  {backend:>6}: {dt:8.2f} s   {nblocks} blocks")
    if rows[1][1] > 0:
        print(f"  speedup numba vs numpy: {rows[1][1] / max(rows[0][1], 1e-9):.1f}x")


if __name__ == "__main__":
    main()
