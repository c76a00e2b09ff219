"""Arithmetic in the quotient ring Z_n[x]/(x^r - 1).

Elements are dense coefficient vectors of length exactly r with every
coefficient reduced into [0, n); x^r wraps around to x^0, so products are
cyclic convolutions.  The modulus n is never assumed prime: everything
below is plain modular arithmetic and stays well-defined for composite n.

Multiplication strategies (all exact, selected per modulus size and the
AKSPRIME_BACKEND environment flag):

  * numba int64 kernel         n <= _kernels.KERNEL_N_MAX
  * Kronecker substitution     larger n: coefficients are packed into one
    big integer, multiplied once (gmpy2 when available), and unpacked -
    the classic subquadratic swap-in for a schoolbook convolution
  * numpy object convolution   the reference fallback, any n
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError

try:
    import gmpy2

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _HAVE_GMPY2 = False

__all__ = [
    "RingParams",
    "RingPoly",
    "poly_from_linear",
    "poly_mul",
    "poly_pow",
    "aks_congruence_holds",
]


@dataclass(frozen=True)
class RingParams:
    """The pair (n, r) defining Z_n[x]/(x^r - 1)."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError("ring modulus n must be >= 2")
        if self.r < 1:
            raise DomainError("cyclic exponent r must be >= 1")


@dataclass(frozen=True)
class RingPoly:
    """An element of Z_n[x]/(x^r - 1).

    coeffs[i] is the coefficient of x^i; the vector always has length
    exactly r and every entry lies in [0, n).  Instances are immutable.
    """

    params: RingParams
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        n, r = self.params.n, self.params.r
        if len(self.coeffs) != r:
            raise DomainError(f"expected {r} coefficients, got {len(self.coeffs)}")
        if any(c < 0 or c >= n for c in self.coeffs):
            raise DomainError("coefficients must be reduced into [0, n)")


def poly_one(params: RingParams) -> RingPoly:
    """The multiplicative identity (the constant polynomial 1)."""
    coeffs = [0] * params.r
    coeffs[0] = 1 % params.n
    return RingPoly(params, tuple(coeffs))


def poly_from_linear(params: RingParams, a: int) -> RingPoly:
    """The element x + a (with a reduced mod n).  Requires r >= 2."""
    if params.r < 2:
        raise DomainError("x + a needs r >= 2 so x and 1 occupy distinct slots")
    coeffs = [0] * params.r
    coeffs[0] = a % params.n
    coeffs[1] = 1
    return RingPoly(params, tuple(coeffs))


def poly_add(p: RingPoly, q: RingPoly) -> RingPoly:
    """Coefficient-wise sum, reduced mod n."""
    if p.params != q.params:
        raise DomainError("ring parameter mismatch")
    n = p.params.n
    return RingPoly(p.params, tuple((a + b) % n for a, b in zip(p.coeffs, q.coeffs)))


def poly_mul(p: RingPoly, q: RingPoly) -> RingPoly:
    """Cyclic-convolution product, every coefficient reduced mod n."""
    if p.params != q.params:
        raise DomainError("ring parameter mismatch")
    n, r = p.params.n, p.params.r
    c1 = list(p.coeffs)
    c2 = c1 if p.coeffs == q.coeffs else list(q.coeffs)
    return RingPoly(p.params, tuple(mul_coeffs(c1, c2, n, r)))


def poly_pow(p: RingPoly, e: int) -> RingPoly:
    """p**e by binary square-and-multiply; at most 2*bitlen(e) products."""
    if e < 0:
        raise DomainError("exponent must be nonnegative")
    coeffs, _ = pow_coeffs(list(p.coeffs), e, p.params.n, p.params.r)
    return RingPoly(p.params, tuple(coeffs))


def aks_congruence_holds(n: int, r: int, a: int) -> bool:
    """Whether (x+a)^n == x^(n mod r) + a in Z_n[x]/(x^r - 1).

    The right-hand side is built directly: x^n collapses to x^(n mod r)
    because x^r == 1 in this ring.
    """
    if n < 2 or r < 2:
        raise DomainError("congruence check requires n >= 2 and r >= 2")
    if not 1 <= a < n:
        raise DomainError("congruence check requires 1 <= a < n")
    base = [0] * r
    base[0] = a % n
    base[1] = 1
    lhs, _ = pow_coeffs(base, n, n, r)
    rhs = [0] * r
    rhs[n % r] += 1
    rhs[0] += a
    rhs = [c % n for c in rhs]
    return lhs == rhs


# ---------------------------------------------------------------------------
# coefficient-level implementations (lists of ints, length r, reduced mod n)
# ---------------------------------------------------------------------------


def mul_coeffs(c1: list[int], c2: list[int], n: int, r: int) -> list[int]:
    """Multiply coefficient vectors through the active backend."""
    if _kernels.backend() == "numba":
        if n <= _kernels.KERNEL_N_MAX:
            return _kernels.mul_via_kernel(c1, c2, n, r)
        return _mul_kronecker(c1, c2, n, r)
    return _mul_reference(c1, c2, n, r)


def pow_coeffs(c: list[int], e: int, n: int, r: int) -> tuple[list[int], int]:
    """Square-and-multiply exponentiation; returns (coeffs, multiplications)."""
    if e == 0:
        out = [0] * r
        out[0] = 1 % n
        return out, 0
    acc = list(c)
    mults = 0
    for bit in bin(e)[3:]:  # MSB-first, skipping the leading 1
        acc = mul_coeffs(acc, acc, n, r)
        mults += 1
        if bit == "1":
            acc = mul_coeffs(acc, c, n, r)
            mults += 1
    return acc, mults


def _mul_reference(c1: list[int], c2: list[int], n: int, r: int) -> list[int]:
    """Schoolbook cyclic convolution on object-dtype numpy (exact, any n)."""
    a = np.array(c1, dtype=object)
    b = a if c2 is c1 else np.array(c2, dtype=object)
    conv = np.convolve(a, b)  # length 2r-1 (or 1 when r == 1)
    out = conv[:r].copy()
    if conv.shape[0] > r:
        out[: conv.shape[0] - r] += conv[r:]
    return [int(v) % n for v in out]


def _mul_kronecker(c1: list[int], c2: list[int], n: int, r: int) -> list[int]:
    """Cyclic convolution via Kronecker substitution.

    Coefficients are packed into slots of B bits with B wide enough that
    no convolution sum can overflow a slot (the sums are bounded by
    r*(n-1)**2), so one integer product recovers the exact convolution.
    """
    B = (r * (n - 1) * (n - 1)).bit_length() + 1
    if _HAVE_GMPY2:
        x = gmpy2.pack([gmpy2.mpz(v) for v in c1], B)
        z = x * x if c2 is c1 else x * gmpy2.pack([gmpy2.mpz(v) for v in c2], B)
        out = [0] * r
        for k, chunk in enumerate(gmpy2.unpack(z, B)):
            out[k % r] += chunk
        return [int(v % n) for v in out]
    # byte-aligned fallback without gmpy2
    Bb = (B + 7) // 8
    x = int.from_bytes(b"".join(v.to_bytes(Bb, "little") for v in c1), "little")
    if c2 is c1:
        z = x * x
    else:
        y = int.from_bytes(b"".join(v.to_bytes(Bb, "little") for v in c2), "little")
        z = x * y
    zb = z.to_bytes(2 * r * Bb, "little")
    out = [0] * r
    for k in range(2 * r - 1):
        out[k % r] += int.from_bytes(zb[k * Bb : (k + 1) * Bb], "little")
    return [v % n for v in out]
