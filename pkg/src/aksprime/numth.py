"""Exact integer number theory primitives.

Everything here works on Python's arbitrary-precision integers and is
exact by construction: no floating point is used anywhere, so results
do not degrade as operands grow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PowerWitness",
    "gcd",
    "pow_mod",
    "integer_root",
    "perfect_power",
    "euler_phi",
    "order_exceeds",
    "multiplicative_order",
]


@dataclass(frozen=True)
class PowerWitness:
    """A decomposition n = base**exp with base >= 2 and exp >= 2.

    exp is the smallest exponent >= 2 that admits an integer base, which
    makes the witness for a given n unique.
    """

    base: int
    exp: int

    def __str__(self) -> str:
        return f"{self.base}^{self.exp}"


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    gcd(a, 0) == a.  gcd(0, 0) is undefined and raises DomainError.
    """
    if a < 0 or b < 0:
        raise DomainError("gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def pow_mod(base: int, exp: int, m: int) -> int:
    """base**exp mod m by binary square-and-multiply.

    Raises DomainError for m < 1.
    """
    if m < 1:
        raise DomainError("modulus must be >= 1")
    if exp < 0:
        raise DomainError("exponent must be nonnegative")
    return pow(base, exp, m)


def integer_root(n: int, b: int) -> tuple[int, bool]:
    """Exact integer b-th root.

    Returns (root, exact) with root = floor(n ** (1/b)) and
    exact = (root**b == n).  Binary search over [1, 2**ceil(bitlen(n)/b)],
    so the answer never depends on floating-point precision.
    """
    if n < 1 or b < 1:
        raise DomainError("integer_root requires n >= 1 and b >= 1")
    if b == 1 or n == 1:
        return n, True
    lo = 1
    hi = 1 << ((n.bit_length() + b - 1) // b)  # 2**ceil(bits/b) >= n**(1/b)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**b <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**b == n


def perfect_power(n: int) -> PowerWitness | None:
    """Detect whether n = a**b for integers a >= 2, b >= 2.

    Scans exponents b ascending from 2 to bitlen(n) and returns the first
    exact decomposition, so the reported exponent is minimal.  Returns
    None when n is not a perfect power; the yes/no answer is exact.
    """
    if n < 2:
        raise DomainError("perfect_power requires n >= 2")
    for b in range(2, n.bit_length() + 1):
        root, exact = integer_root(n, b)
        if exact:
            return PowerWitness(root, b)
    return None


def euler_phi(r: int) -> int:
    """Euler's totient of r, by trial-division factorization.

    Intended for the small moduli used by the r-search; the factorization
    loop is O(sqrt(r)).
    """
    if r < 1:
        raise DomainError("euler_phi requires r >= 1")
    result = r
    m = r
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def order_exceeds(n: int, r: int, t: int) -> bool:
    """True iff n**k mod r != 1 for every k in [1, t].

    Equivalent to ord_r(n) > t.  Uses a running product (one modular
    multiplication per k) rather than t independent exponentiations.
    Requires r >= 2 and gcd(n, r) == 1, otherwise the order is undefined.
    """
    if r < 2:
        raise DomainError("order_exceeds requires r >= 2")
    if math.gcd(n, r) != 1:
        raise DomainError("multiplicative order undefined: gcd(n, r) != 1")
    x = n % r
    cur = 1
    for _ in range(t):
        cur = cur * x % r
        if cur == 1:
            return False
    return True


def multiplicative_order(n: int, r: int) -> int:
    """Smallest k >= 1 with n**k == 1 (mod r).

    Requires gcd(n, r) == 1 and r >= 2.  The result always divides
    euler_phi(r).
    """
    if r < 2:
        raise DomainError("multiplicative_order requires r >= 2")
    if math.gcd(n, r) != 1:
        raise DomainError("multiplicative order undefined: gcd(n, r) != 1")
    x = n % r
    cur = x
    for k in range(1, r + 1):
        if cur == 1:
            return k
        cur = cur * x % r
    raise AssertionError("unreachable: order exceeds r for a unit mod r")
