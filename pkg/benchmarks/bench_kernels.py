#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the pure-numpy fallback.

Times the Hamiltonian application (the hot loop of Krylov stepping), the
sector-weight reduction, and an end-to-end collision-style evolution with
each backend.  Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sizes 32 64 128 --repeats 2000
"""

import argparse
import math
import time

import numpy as np

from spinberry.kernels import _numpy

try:
    from spinberry.kernels import _core
except ImportError:
    _core = None


def time_call(fn, *args, repeats):
    best = math.inf
    for _ in range(5):
        start = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def bench_kernels(sizes, repeats):
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18}{'N':>5}{'numpy':>12}{'cython':>12}{'speedup':>9}")
    for n in sizes:
        amp = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        amp /= np.linalg.norm(amp)
        a_idx = np.arange(n // 2, dtype=np.int64)
        b_idx = np.arange(n // 2, n, dtype=np.int64)
        cases = [
            ("hubbard_apply", (amp, 1.0, 1.0, False)),
            ("sector_weights", (amp, a_idx, b_idx)),
            ("cross_overlap_sum", (amp, a_idx, b_idx)),
        ]
        for name, args in cases:
            t_np = time_call(getattr(_numpy, name), *args, repeats=repeats)
            if _core is None:
                print(f"{name:<18}{n:>5}{t_np * 1e6:>10.1f}us{'-':>12}{'-':>9}")
                continue
            t_cy = time_call(getattr(_core, name), *args, repeats=repeats)
            print(
                f"{name:<18}{n:>5}{t_np * 1e6:>10.1f}us{t_cy * 1e6:>10.1f}us"
                f"{t_np / t_cy:>8.1f}x"
            )


def bench_evolution(n, t_final):
    """End-to-end Lanczos evolution of a two-packet state per backend."""
    import os
    import subprocess
    import sys

    code = f"""
import time
import numpy as np
from spinberry import HubbardParams, WavePacketSpec, initial_packets, build_hamiltonian, evolve
from spinberry.kernels import BACKEND
params = HubbardParams({n}, 1.0, 1.0)
state = initial_packets(
    params,
    WavePacketSpec({n} * 0.25, {n} / 11, +np.pi / 2, "up"),
    WavePacketSpec({n} * 0.75, {n} / 11, -np.pi / 2, "down"),
)
h = build_hamiltonian(params)
start = time.perf_counter()
evolve(state, h, {t_final}, method="krylov", dt=0.05)
print(f"{{BACKEND}}: {{time.perf_counter() - start:.3f}}s")
"""
    print(f"\nkrylov evolution, N={n}, T={t_final}:")
    for backend in ("numpy", "cython"):
        if backend == "cython" and _core is None:
            print("cython: extension not built")
            continue
        env = dict(os.environ, SPINBERRY_KERNELS=backend)
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        print(out.stdout.strip() or out.stderr.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 64, 128])
    parser.add_argument("--repeats", type=int, default=1000)
    parser.add_argument("--evolve-sites", type=int, default=64)
    parser.add_argument("--evolve-time", type=float, default=16.0)
    args = parser.parse_args()

    if _core is None:
        print("note: compiled core unavailable, numpy-only timings\n")
    bench_kernels(args.sizes, args.repeats)
    bench_evolution(args.evolve_sites, args.evolve_time)


if __name__ == "__main__":
    main()
