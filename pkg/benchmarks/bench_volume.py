#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the pure-Python fallback.

Both backends consume identical sample blocks and must report identical hit
counts; the interesting number is throughput. Run from the repo root:

    python3 benchmarks/bench_volume.py [--samples N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from neutroset._kernels import _volume_py

try:
    from neutroset._kernels import _volume_cy
except ImportError:
    _volume_cy = None

CASES = [
    ("sum <= 1, 3 components (exponent 1)", 1.0, 1.0, 3),
    ("squared sum <= 1, 3 components (exponent 2)", 2.0, 1.0, 3),
    ("powered sum <= 1, 3 components (exponent 3.5)", 3.5, 1.0, 3),
]


def run(samples: int) -> None:
    gen = np.random.Generator(np.random.Philox(2024))
    block = gen.random((samples, 3))
    print(f"{samples:,} samples per case\n")
    header = f"{'case':<46} {'backend':<9} {'hits':>10} {'time':>9} {'Msamp/s':>9}"
    print(header)
    print("-" * len(header))
    for name, exponent, bound, ncols in CASES:
        results = {}
        for label, mod in (("python", _volume_py), ("compiled", _volume_cy)):
            if mod is None:
                print(f"{name:<46} {label:<9} {'(extension not built)':>10}")
                continue
            t0 = time.perf_counter()
            hits = mod.count_satisfying(block, exponent, bound, 1e-9, ncols)
            dt = time.perf_counter() - t0
            results[label] = (hits, dt)
            rate = samples / dt / 1e6
            print(f"{name:<46} {label:<9} {hits:>10,} {dt:>8.3f}s {rate:>9.1f}")
        if len(results) == 2:
            (h_py, t_py), (h_cy, t_cy) = results["python"], results["compiled"]
            agree = "identical counts" if h_py == h_cy else "COUNTS DIFFER"
            print(f"{'':<46} speedup {t_py / t_cy:>5.1f}x  ({agree})")
        print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=2_000_000)
    run(parser.parse_args().samples)


if __name__ == "__main__":
    main()
