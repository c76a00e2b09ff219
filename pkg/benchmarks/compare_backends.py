#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallback.

Runs the same ring workloads under both AKSPRIME_BACKEND settings and
prints timings side by side.  Verifies along the way that both backends
return identical coefficients.

Usage: python benchmarks/compare_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import os
import time

WORKLOADS = [
    # (modulus n, ring size r, exponent e)  - one (x+a)^e per measurement
    ("small ring", 97, 32, 10_007),
    ("medium ring", 65_537, 128, 1_000_003),
    ("large ring", 7_741_043, 541, 7_741_043),
]


def _time_pow(n: int, r: int, e: int, repeat: int) -> tuple[float, tuple[int, ...]]:
    from aksprime.polyring import RingParams, poly_from_linear, poly_pow

    p = poly_from_linear(RingParams(n, r), 1)
    poly_pow(p, e)  # warm-up (JIT compile under the numba backend)
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = poly_pow(p, e)
        best = min(best, time.perf_counter() - t0)
    return best, result.coeffs


def _run_backend(backend: str, repeat: int) -> dict[str, tuple[float, tuple[int, ...]]]:
    os.environ["AKSPRIME_BACKEND"] = backend
    out = {}
    for name, n, r, e in WORKLOADS:
        out[name] = _time_pow(n, r, e, repeat)
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="one repetition per case")
    args = parser.parse_args()
    repeat = 1 if args.quick else 3

    numba_times = _run_backend("numba", repeat)
    numpy_times = _run_backend("numpy", repeat)
    os.environ.pop("AKSPRIME_BACKEND", None)

    print(f"{'workload':<14} {'numba':>12} {'numpy':>12} {'speedup':>9}  match")
    for name, n, r, e in WORKLOADS:
        tb, cb = numba_times[name]
        tn, cn = numpy_times[name]
        match = "yes" if cb == cn else "NO"
        print(
            f"{name:<14} {tb * 1000:>10.2f}ms {tn * 1000:>10.2f}ms"
            f" {tn / tb:>8.1f}x  {match}"
        )
        if match != "yes":
            raise SystemExit(f"backend mismatch on {name} (n={n}, r={r}, e={e})")


if __name__ == "__main__":
    main()
