"""Shared test helpers: independent brute-force oracles.

These deliberately re-derive results with the most naive method available
(double loops, full binomial expansions, exhaustive enumeration) so the
library code is checked against something that cannot share its bugs.
"""

from __future__ import annotations


def ref_cyclic_mul(c1: list[int], c2: list[int], n: int, r: int) -> list[int]:
    """Schoolbook cyclic convolution mod n, the slow obvious way."""
    out = [0] * r
    for i in range(r):
        for j in range(r):
            out[(i + j) % r] = (out[(i + j) % r] + c1[i] * c2[j]) % n
    return out


def ref_pow_linear(n: int, r: int, a: int, e: int) -> list[int]:
    """(x + a)**e in Z_n[x]/(x^r - 1) by e-fold repeated multiplication."""
    base = [0] * r
    base[0] = a % n
    base[1] = 1 % n
    acc = [0] * r
    acc[0] = 1 % n
    for _ in range(e):
        acc = ref_cyclic_mul(acc, base, n, r)
    return acc


def brute_perfect_power(n: int) -> tuple[int, int] | None:
    """Smallest-exponent perfect-power decomposition by exhaustive search."""
    for b in range(2, n.bit_length() + 1):
        lo, hi = 1, 1 << ((n.bit_length() + b - 1) // b)
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if mid**b <= n:
                lo = mid
            else:
                hi = mid - 1
        if lo**b == n:
            return lo, b
    return None
